use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Marker, Multigraph, VertexId, WeightedEdge};

use super::require_four_regular;

/// The four cut vertices of a twist, named after their roles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistCut {
    pub a: VertexId,
    pub b: VertexId,
    pub zero: VertexId,
    pub infinity: VertexId,
}

impl TwistCut {
    /// Reads the cut from the graph's `a`, `b`, `zero` and `infinity` markers.
    pub fn from_markers(g: &Multigraph) -> Result<Self> {
        let get = |m: Marker| {
            g.marker(m)
                .ok_or_else(|| Error::InvalidCut(format!("graph has no \"{m}\" marker")))
        };
        Ok(TwistCut {
            a: get(Marker::A)?,
            b: get(Marker::B)?,
            zero: get(Marker::Zero)?,
            infinity: get(Marker::Infinity)?,
        })
    }

    pub fn vertices(&self) -> [VertexId; 4] {
        [self.a, self.b, self.zero, self.infinity]
    }

    /// `a <-> b`, `zero <-> infinity`; other vertices are fixed.
    fn swap(&self, v: VertexId) -> VertexId {
        match v {
            x if x == self.a => self.b,
            x if x == self.b => self.a,
            x if x == self.zero => self.infinity,
            x if x == self.infinity => self.zero,
            x => x,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TwistResult {
    pub graph: Multigraph,
    /// Weight moved from edge `{a, zero}` to edge `{b, infinity}`.
    pub t1: i64,
    /// Weight moved from edge `{zero, b}` to edge `{infinity, a}`.
    pub t2: i64,
}

/// Twists one side of a four-vertex cut of a weighted 4-regular graph.
///
/// Edges from the component containing `side` to `a` are reattached to `b`
/// and vice versa; likewise `zero` and `infinity`. Degrees at the cut are then
/// restored by moving weight between opposite edges of the four-cycle
/// `a - zero - b - infinity`. Edges among the cut vertices are merged per
/// pair; a positive total becomes that many unit edges, a negative total a
/// single inverse propagator, and a zero total disappears. The diagonals
/// `{a, b}` and `{zero, infinity}` are only merged, never rebalanced.
///
/// Edge ids are renumbered densely; the rotation system is dropped.
pub fn twist(g: &Multigraph, cut: TwistCut, side: VertexId) -> Result<TwistResult> {
    require_four_regular(g)?;
    let components = g.split_by_cut(&cut.vertices())?;
    if components.len() < 2 {
        return Err(Error::CutNotSeparating);
    }
    let twisted_side = components
        .iter()
        .find(|c| c.contains(&side))
        .ok_or(Error::SideNotInComponent(side))?;
    let in_cut = |v: VertexId| cut.vertices().contains(&v);

    let mut kept: Vec<(VertexId, VertexId, i64)> = Vec::new();
    let mut pair_weight: BTreeMap<(VertexId, VertexId), i64> = BTreeMap::new();
    for e in g.edges() {
        let (u, v) = (e.u, e.v);
        if in_cut(u) && in_cut(v) {
            *pair_weight.entry(ordered(u, v)).or_default() += e.weight;
        } else if in_cut(u) && twisted_side.contains(&v) {
            kept.push((cut.swap(u), v, e.weight));
        } else if in_cut(v) && twisted_side.contains(&u) {
            kept.push((u, cut.swap(v), e.weight));
        } else {
            kept.push((u, v, e.weight));
        }
    }

    let degree_at = |x: VertexId, pairs: &BTreeMap<(VertexId, VertexId), i64>| -> i64 {
        let outside: i64 = kept
            .iter()
            .filter(|&&(u, v, _)| u == x || v == x)
            .map(|&(_, _, w)| w)
            .sum();
        let inside: i64 = pairs
            .iter()
            .filter(|(&(u, v), _)| u == x || v == x)
            .map(|(_, &w)| w)
            .sum();
        outside + inside
    };
    let deficit = |x: VertexId| 4 - degree_at(x, &pair_weight);
    let (da, db, d0, dinf) = (
        deficit(cut.a),
        deficit(cut.b),
        deficit(cut.zero),
        deficit(cut.infinity),
    );
    // a: t2 - t1 = da, b: t1 - t2 = db, zero: -t1 - t2 = d0, infinity: t1 + t2 = dinf
    if da + db != 0 || d0 + dinf != 0 || (da + dinf) % 2 != 0 {
        return Err(Error::Invariant(format!(
            "twist rebalancing has no integral solution for deficits a={da}, b={db}, zero={d0}, infinity={dinf}"
        )));
    }
    let t2 = (da + dinf) / 2;
    let t1 = (dinf - da) / 2;
    *pair_weight.entry(ordered(cut.a, cut.zero)).or_default() -= t1;
    *pair_weight.entry(ordered(cut.b, cut.infinity)).or_default() += t1;
    *pair_weight.entry(ordered(cut.zero, cut.b)).or_default() -= t2;
    *pair_weight.entry(ordered(cut.infinity, cut.a)).or_default() += t2;

    let mut edges: Vec<WeightedEdge> = Vec::with_capacity(g.edge_count());
    let mut push = |u, v, w| {
        let id = edges.len() as u32;
        edges.push(WeightedEdge::new(id, u, v, w));
    };
    for &(u, v, w) in &kept {
        push(u, v, w);
    }
    for (&(u, v), &w) in &pair_weight {
        if w > 0 {
            for _ in 0..w {
                push(u, v, 1);
            }
        } else if w < 0 {
            push(u, v, w);
        }
    }

    let out = Multigraph::new(g.vertices().iter().copied(), edges)?.with_markers(g.markers())?;
    if let Err(e) = require_four_regular(&out) {
        return Err(Error::Invariant(format!("twist output: {e}")));
    }
    if out.total_weight() != g.total_weight() {
        return Err(Error::Invariant(format!(
            "twist changed the total weight from {} to {}",
            g.total_weight(),
            out.total_weight()
        )));
    }
    Ok(TwistResult { graph: out, t1, t2 })
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}
