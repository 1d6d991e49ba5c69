//! Builds the zig-zag graphs and the three-parameter ladder family, and
//! prints their basic counts.
//!
//! ```bash
//! cargo run --example graph_families
//! ```

use period_forge::families::{family_graph_with_layout, zigzag, zigzag_completed, FamilyParams};
use period_forge::json::graph_to_json;
use period_forge::transforms::complete;
use period_forge::Marker;

fn main() -> period_forge::Result<()> {
    println!("{:>3} {:>9} {:>6} {:>6}", "n", "vertices", "edges", "loops");
    for n in 3..=8 {
        let z = zigzag(n)?;
        println!("{n:>3} {:>9} {:>6} {:>6}", z.vertex_count(), z.edge_count(), z.loop_number()?);
    }

    let closed = zigzag_completed(5)?;
    let four_regular = closed.vertices().iter().all(|&v| matches!(closed.weighted_degree(v), Ok(4)));
    println!("\ncompleted Z_5: {} vertices, 4-regular: {four_regular}", closed.vertex_count());

    let p = FamilyParams::new(1, 2, 3)?;
    let (g, layout) = family_graph_with_layout(p);
    println!("\nG{p}: n = {}, {} vertices, {} edges", p.n(), g.vertex_count(), g.edge_count());
    println!("  apex {} with degree {}", layout.apex, g.degree(layout.apex)?);
    println!("  top rail {:?}", layout.top);
    println!("  bottom rail {:?}", layout.bottom);
    for m in [Marker::A, Marker::B, Marker::Zero] {
        println!("  marker {} = {:?}", m.name(), g.marker(m));
    }

    let c = complete(&g)?;
    let negative: Vec<_> = c.edges().iter().filter(|e| e.weight < 0).collect();
    println!("  completion adds vertex {:?} and {} negative edge(s)", c.marker(Marker::Infinity), negative.len());

    println!("\nG(1, 1, 1) as JSON:\n{}", graph_to_json(&family_graph_with_layout(FamilyParams::new(1, 1, 1)?).0));
    Ok(())
}
