//! Canonical forms and explicit isomorphisms.
//!
//! ```bash
//! cargo run --example isomorphism
//! ```

use period_forge::canon::{canonical_form, is_isomorphic, isomorphism};
use period_forge::families::{family_graph, zigzag, FamilyParams};

fn main() -> period_forge::Result<()> {
    let g = family_graph(FamilyParams::new(2, 1, 3)?);
    let mirror = family_graph(FamilyParams::new(1, 2, 3)?);
    match isomorphism(&g, &mirror) {
        Some(map) => {
            println!("G(2, 1, 3) -> G(1, 2, 3):");
            for (u, v) in map {
                println!("  {u:>2} -> {v:>2}");
            }
        }
        None => println!("not isomorphic"),
    }

    let one_rung = family_graph(FamilyParams::new(2, 1, 1)?);
    println!("G(2, 1, 1) is Z_8: {}", is_isomorphic(&one_rung, &zigzag(8)?));
    println!("G(2, 1, 3) is Z_12: {}", is_isomorphic(&g, &zigzag(12)?));

    let form = canonical_form(&zigzag(5)?);
    println!("canonical Z_5: {} vertices, edges {:?}", form.certificate.vertex_count, form.certificate.edges);
    Ok(())
}
