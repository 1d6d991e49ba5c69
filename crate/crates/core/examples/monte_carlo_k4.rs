//! Monte Carlo estimate of the K4 period with both samplers, compared with
//! the exact value 6 zeta(3).
//!
//! ```bash
//! cargo run --release --example monte_carlo_k4
//! ```

use period_forge::closed::zigzag_period;
use period_forge::families::zigzag;
use period_forge::mc::{estimate_period, zscore, McConfig, Sampler};

fn main() -> period_forge::Result<()> {
    let k4 = zigzag(3)?;
    let exact = zigzag_period(3)?.as_float(1e-13)?;
    println!("exact {exact:.6}");
    for sampler in [Sampler::Simplex, Sampler::Affine] {
        for tail_exponent in [None, Some(1.0)] {
            let cfg = McConfig { samples: 400_000, seed: 1, workers: 4, sampler, tail_exponent, ..McConfig::default() };
            let est = estimate_period(&k4, &cfg)?;
            println!(
                "{sampler:>8} beta {:.3}: {:.5} +- {:.5}  z {:+.2}  plain mean {:.5}",
                est.tail_exponent,
                est.mean,
                est.stderr,
                zscore(&est, exact)?,
                est.plain_mean
            );
        }
    }
    Ok(())
}
