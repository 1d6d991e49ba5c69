//! Exact closed-form periods for zig-zag graphs and the ladder family.
//!
//! ```bash
//! cargo run --example period_table
//! ```

use period_forge::closed::{family_period, zeta, zigzag_period};
use period_forge::families::FamilyParams;

fn main() -> period_forge::Result<()> {
    for s in [3, 5, 7] {
        println!("zeta({s}) = {:.15}", zeta(s, 1e-14)?);
    }
    println!();
    for n in 3..=12 {
        let v = zigzag_period(n)?;
        println!("Z_{n:<3} {:<28} {:>22.10}", v.to_string(), v.as_float(1e-13)?);
    }
    println!();
    for p in FamilyParams::all_up_to(4) {
        let v = family_period(p);
        println!("G{:<10} {:<28} {:>22.10}", p.to_string(), v.to_string(), v.as_float(1e-13)?);
    }
    Ok(())
}
