//! Period-preserving graph transformations: completion, decompletion, the
//! twist at a four-vertex cut, and the planar dual; plus the reduction chain
//! that strings them together for the ladder family.

mod chain;
mod dual;
mod twist;

pub use chain::{reduce_to_zigzag, ChainReport, ChainStep};
pub use dual::{faces, planar_dual};
pub use twist::{twist, TwistCut, TwistResult};

use crate::error::{Error, Result};
use crate::graph::{Marker, Multigraph, VertexId, WeightedEdge};

/// Adds a vertex `infinity` so that every vertex has weighted degree 4.
///
/// Each vertex of degree `d < 4` gains `4 - d` parallel unit edges to
/// infinity; each vertex of degree `d > 4` gains a single inverse propagator
/// of weight `-(d - 4)`. The rotation system is dropped.
pub fn complete(g: &Multigraph) -> Result<Multigraph> {
    g.require_ordinary()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let infinity = g.next_vertex_id();
    let mut next_edge = g.next_edge_id();
    let mut edges: Vec<WeightedEdge> = g.edges().to_vec();
    let degrees: Vec<(VertexId, usize)> = g
        .vertices()
        .iter()
        .map(|&v| (v, g.degree(v).expect("vertex")))
        .collect();
    if let Some(&(v, d)) = degrees.iter().find(|&&(_, d)| d < 3) {
        return Err(Error::NotCompletable(format!(
            "vertex {v} has degree {d}, completion needs degree >= 3"
        )));
    }
    for &(v, d) in &degrees {
        for _ in d..4 {
            edges.push(WeightedEdge::unit(next_edge, v, infinity));
            next_edge += 1;
        }
    }
    for &(v, d) in &degrees {
        if d > 4 {
            edges.push(WeightedEdge::new(next_edge, v, infinity, -(d as i64 - 4)));
            next_edge += 1;
        }
    }
    let vertices = g.vertices().iter().copied().chain(std::iter::once(infinity));
    let completed = Multigraph::new(vertices, edges)?
        .with_markers(g.markers())?
        .with_marker(Marker::Infinity, infinity)?;
    let at_infinity = completed.weighted_degree(infinity)?;
    if at_infinity != 4 {
        return Err(Error::NotCompletable(format!(
            "the added vertex ends with weighted degree {at_infinity}"
        )));
    }
    Ok(completed)
}

/// Removes `v` from a completed graph. Every negative edge must touch `v`,
/// and what remains must be an ordinary graph.
pub fn decomplete(g: &Multigraph, v: VertexId) -> Result<Multigraph> {
    g.require_vertex(v)?;
    if let Some(e) = g.edges().iter().find(|e| e.weight < 0 && !e.touches(v)) {
        return Err(Error::StrayNegativeEdge {
            edge: e.id,
            vertex: v,
        });
    }
    let out = g.without_vertex(v)?.without_rotation();
    out.require_ordinary()?;
    Ok(out)
}

/// Checks that every vertex has weighted degree exactly 4.
pub fn require_four_regular(g: &Multigraph) -> Result<()> {
    for &v in g.vertices() {
        let degree = g.weighted_degree(v)?;
        if degree != 4 {
            return Err(Error::NotFourRegular { vertex: v, degree });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{family_graph, zigzag, zigzag_completed, FamilyParams};

    #[test]
    fn completing_k4_gives_k5() {
        let k5 = complete(&zigzag(3).unwrap()).unwrap();
        assert!(is_isomorphic(&k5, &zigzag_completed(3).unwrap()));
        assert!(k5.edges().iter().all(|e| e.weight == 1));
    }

    #[test]
    fn completion_adds_inverse_propagator_at_apex() {
        let p = FamilyParams::new(1, 1, 2).unwrap();
        let g = family_graph(p);
        let c = complete(&g).unwrap();
        let inf = c.marker(Marker::Infinity).unwrap();
        let apex = c.marker(Marker::A).unwrap();
        require_four_regular(&c).unwrap();
        assert_eq!(c.weighted_degree(inf).unwrap(), 4);
        let positive = c.incident_edges(inf).filter(|e| e.weight == 1).count();
        assert_eq!(positive, 5);
        let negative: Vec<_> = c.incident_edges(inf).filter(|e| e.weight < 0).collect();
        assert_eq!(negative.len(), 1);
        assert_eq!(negative[0].weight, -1);
        assert!(negative[0].touches(apex));
    }

    #[test]
    fn completion_at_m1_has_no_negative_edge() {
        let c = complete(&family_graph(FamilyParams::new(1, 1, 1).unwrap())).unwrap();
        assert!(c.edges().iter().all(|e| e.weight == 1));
        require_four_regular(&c).unwrap();
    }

    #[test]
    fn completion_rejects_low_degree_and_bad_balance() {
        let triangle = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(complete(&triangle), Err(Error::NotCompletable(_))));
        // K5 is already 4-regular: the added vertex would be isolated.
        let k5 = zigzag_completed(3).unwrap();
        assert!(matches!(complete(&k5), Err(Error::NotCompletable(_))));
    }

    #[test]
    fn decompletion_inverts_completion() {
        let k5 = zigzag_completed(3).unwrap();
        let k4 = decomplete(&k5, 2).unwrap();
        assert!(is_isomorphic(&k4, &zigzag(3).unwrap()));

        let g = family_graph(FamilyParams::new(1, 1, 2).unwrap());
        let c = complete(&g).unwrap();
        let back = decomplete(&c, c.marker(Marker::Infinity).unwrap()).unwrap();
        assert_eq!(back, g.without_rotation());
    }

    #[test]
    fn decompletion_rejects_stray_negative_edge() {
        let g = Multigraph::new(
            0..3,
            [WeightedEdge::unit(0, 0, 1), WeightedEdge::new(1, 1, 2, -1)],
        )
        .unwrap();
        assert!(matches!(
            decomplete(&g, 0),
            Err(Error::StrayNegativeEdge { edge: 1, vertex: 0 })
        ));
    }
}
