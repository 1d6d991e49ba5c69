//! Reduces G(k, l, m) to a zig-zag graph by repeated completion, twist and
//! decompletion, checking every intermediate graph up to isomorphism.
//!
//! ```bash
//! cargo run --example twist_chain -- 2 1 4
//! ```

use period_forge::families::FamilyParams;
use period_forge::transforms::reduce_to_zigzag;

fn main() -> period_forge::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, l, m) = match args[..] {
        [k, l, m] => (k, l, m),
        _ => (2, 2, 3),
    };
    let report = reduce_to_zigzag(FamilyParams::new(k, l, m)?)?;
    println!("G{} with {} loops", report.params, report.zigzag_loops);
    for step in &report.steps {
        println!(
            "  G{} -> G{}: completed {} vertices, twist shifts t1 = {}, t2 = {}, matches {}",
            step.from,
            step.to,
            step.completed.vertex_count(),
            step.t1,
            step.t2,
            step.twisted_matches && step.decompleted_matches
        );
    }
    println!("terminal graph is Z_{}: {}", report.zigzag_loops, report.terminal_matches_zigzag);
    println!("verdict: {}", report.verdict);

    let all = FamilyParams::all_up_to(6);
    let passed = all.iter().filter(|&&p| reduce_to_zigzag(p).map(|r| r.verdict).unwrap_or(false)).count();
    println!("\nall triples with k + l + m <= 6: {passed} of {} verified", all.len());
    Ok(())
}
