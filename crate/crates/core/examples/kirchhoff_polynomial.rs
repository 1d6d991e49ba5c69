//! Kirchhoff polynomial of K4 by tree enumeration and by deletion and
//! contraction, the matrix-tree count, and fast numeric evaluation.
//!
//! ```bash
//! cargo run --example kirchhoff_polynomial
//! ```

use std::collections::BTreeMap;

use period_forge::families::{family_graph, zigzag, FamilyParams};
use period_forge::kirchhoff::{psi_del_contract, psi_enumerate, psi_eval, spanning_tree_count, DEFAULT_MAX_EDGES};

fn main() -> period_forge::Result<()> {
    let k4 = zigzag(3)?;
    let by_trees = psi_enumerate(&k4, DEFAULT_MAX_EDGES)?;
    let by_recursion = psi_del_contract(&k4, DEFAULT_MAX_EDGES)?;
    println!("Psi(K4) = {by_trees}");
    println!("backends agree: {}", by_trees == by_recursion);
    println!("monomials {} / spanning trees {}", by_trees.len(), spanning_tree_count(&k4)?);

    let point: BTreeMap<u32, f64> = k4.edges().iter().map(|e| (e.id, 0.5 + e.id as f64)).collect();
    println!("at alpha_e = 0.5 + e: symbolic {:.6}, numeric {:.6}", by_trees.evaluate(|e| point[&e]), psi_eval(&k4, &point)?);

    println!("\n{:>12} {:>6} {:>12}", "graph", "edges", "trees");
    for p in FamilyParams::all_up_to(5) {
        let g = family_graph(p);
        println!("{:>12} {:>6} {:>12}", format!("G{p}"), g.edge_count(), spanning_tree_count(&g)?);
    }
    Ok(())
}
