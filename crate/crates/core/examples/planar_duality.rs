//! Planar duals of family graphs from their rotation systems, and the
//! identity Psi_dual(alpha) = (prod alpha) Psi(1 / alpha).
//!
//! ```bash
//! cargo run --example planar_duality
//! ```

use std::collections::BTreeMap;

use period_forge::families::{family_graph, FamilyParams};
use period_forge::kirchhoff::{psi_enumerate, psi_eval, DEFAULT_MAX_EDGES};
use period_forge::transforms::{faces, planar_dual};

fn main() -> period_forge::Result<()> {
    let p = FamilyParams::new(1, 1, 2)?;
    let g = family_graph(p);
    let face_list = faces(&g)?;
    println!("G{p}: V = {}, E = {}, F = {}", g.vertex_count(), g.edge_count(), face_list.len());
    for (i, face) in face_list.iter().enumerate() {
        let walk: Vec<_> = face.iter().map(|(_, v)| v).collect();
        println!("  face {i}: {walk:?}");
    }

    let dual = planar_dual(&g)?;
    let mut degrees: Vec<usize> = dual.vertices().iter().map(|&v| dual.degree(v)).collect::<Result<_, _>>()?;
    degrees.sort_unstable();
    println!("dual degrees {degrees:?}");

    let symbolic = psi_enumerate(&dual, DEFAULT_MAX_EDGES)? == psi_enumerate(&g, DEFAULT_MAX_EDGES)?.complement();
    println!("Psi(dual) equals the complemented Psi(G): {symbolic}");

    let big = family_graph(FamilyParams::new(1, 2, 2)?);
    let big_dual = planar_dual(&big)?;
    let point: BTreeMap<u32, f64> = big.edges().iter().map(|e| (e.id, 1.0 + 0.1 * e.id as f64)).collect();
    let inverse: BTreeMap<u32, f64> = point.iter().map(|(&e, &x)| (e, 1.0 / x)).collect();
    let lhs = psi_eval(&big_dual, &point)?;
    let rhs = point.values().product::<f64>() * psi_eval(&big, &inverse)?;
    println!("G(1, 2, 2) numeric check: {lhs:.10e} vs {rhs:.10e}");
    Ok(())
}
