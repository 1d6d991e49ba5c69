//! Generators for the zig-zag graphs and the triangle/box ladder family
//! `G(k, l, m)` with its planar dual.
//!
//! Labels are an artifact convention: any isomorphic relabeling is equally
//! valid. They are assigned deterministically so output is reproducible.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Marker, Multigraph, VertexId, WeightedEdge};
use crate::transforms::planar_dual;

/// The triple `(k, l, m)`, all at least 1. Loop number is `n = 2(k + l + m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    k: u32,
    l: u32,
    m: u32,
}

impl FamilyParams {
    pub fn new(k: u32, l: u32, m: u32) -> Result<Self> {
        if k == 0 || l == 0 || m == 0 {
            return Err(Error::InvalidParameter(format!(
                "family parameters must be at least 1, got (k, l, m) = ({k}, {l}, {m})"
            )));
        }
        Ok(FamilyParams { k, l, m })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        2 * (self.k + self.l + self.m)
    }

    /// Every triple with `k + l + m <= total`, in lexicographic order.
    pub fn all_up_to(total: u32) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for k in 1..=total {
            for l in 1..=total {
                for m in 1..=total {
                    if k + l + m <= total {
                        out.push(FamilyParams { k, l, m });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k, self.l, self.m)
    }
}

/// The (1,2)-circulant on `n + 2` vertices.
pub fn zigzag_completed(n: u32) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "zig-zag graphs need n >= 3, got {n}"
        )));
    }
    let size = n + 2;
    let mut pairs = Vec::with_capacity(2 * size as usize);
    for i in 0..size {
        pairs.push((i, (i + 1) % size));
    }
    for i in 0..size {
        pairs.push((i, (i + 2) % size));
    }
    Multigraph::from_pairs(size, &pairs)
}

/// The zig-zag graph with `n` loops: the completed circulant minus vertex `n + 1`.
pub fn zigzag(n: u32) -> Result<Multigraph> {
    zigzag_completed(n)?.without_vertex(n + 1)
}

/// Named vertices of a generated `G(k, l, m)`.
///
/// `top[i]` and `bottom[i]` are the rails of the box ladder. The left strip
/// has inner column `top[0], left_inner.., bottom[0]` and outer column
/// `left_outer`; the right strip mirrors it on `top[m]`, `bottom[m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyLayout {
    pub params: FamilyParams,
    pub apex: VertexId,
    pub top: Vec<VertexId>,
    pub bottom: Vec<VertexId>,
    pub left_inner: Vec<VertexId>,
    pub left_outer: Vec<VertexId>,
    pub right_inner: Vec<VertexId>,
    pub right_outer: Vec<VertexId>,
}

impl FamilyLayout {
    /// Top vertex of the left outer column; identifies the side twisted by
    /// the reduction chain.
    pub fn left_top_outer(&self) -> VertexId {
        self.left_outer[0]
    }

    pub fn right_top_outer(&self) -> VertexId {
        self.right_outer[0]
    }

    /// Full left inner column from `top[0]` down to `bottom[0]`.
    pub fn left_column(&self) -> Vec<VertexId> {
        column(self.top[0], &self.left_inner, self.bottom[0])
    }

    pub fn right_column(&self) -> Vec<VertexId> {
        let m = self.params.m as usize;
        column(self.top[m], &self.right_inner, self.bottom[m])
    }
}

fn column(first: VertexId, middle: &[VertexId], last: VertexId) -> Vec<VertexId> {
    std::iter::once(first)
        .chain(middle.iter().copied())
        .chain(std::iter::once(last))
        .collect()
}

pub fn family_graph(p: FamilyParams) -> Multigraph {
    family_graph_with_layout(p).0
}

/// Builds `G(k, l, m)` together with its named vertices.
///
/// Markers: `a` is the apex, `b` is `top[1]`, `zero` is `bottom[1]`. A
/// rotation system from a straight-line planar drawing is attached.
pub fn family_graph_with_layout(p: FamilyParams) -> (Multigraph, FamilyLayout) {
    let (k, l, m) = (p.k, p.l, p.m);
    let mut next: VertexId = 0;
    let mut fresh = |count: u32| -> Vec<VertexId> {
        let ids = (next..next + count).collect();
        next += count;
        ids
    };
    let top = fresh(m + 1);
    let bottom = fresh(m + 1);
    let left_inner = fresh(k - 1);
    let left_outer = fresh(k);
    let right_inner = fresh(l - 1);
    let right_outer = fresh(l);
    let apex = fresh(1)[0];
    let layout = FamilyLayout {
        params: p,
        apex,
        top,
        bottom,
        left_inner,
        left_outer,
        right_inner,
        right_outer,
    };

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let (top, bottom) = (&layout.top, &layout.bottom);
    for i in 0..m as usize {
        pairs.push((top[i], top[i + 1]));
    }
    for i in 0..m as usize {
        pairs.push((bottom[i], bottom[i + 1]));
    }
    for i in 1..m as usize {
        pairs.push((top[i], bottom[i]));
    }
    triangle_strip(&mut pairs, &layout.left_column(), &layout.left_outer);
    triangle_strip(&mut pairs, &layout.right_column(), &layout.right_outer);
    pairs.push((apex, layout.left_top_outer()));
    for &t in top {
        pairs.push((apex, t));
    }
    pairs.push((apex, layout.right_top_outer()));

    let edges = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| WeightedEdge::unit(i as EdgeId, u, v));
    let g = Multigraph::new(0..next, edges)
        .expect("generator emits a valid graph")
        .with_rotation_from_positions(&drawing(&layout))
        .expect("drawing covers every vertex")
        .with_marker(Marker::A, apex)
        .and_then(|g| g.with_marker(Marker::B, layout.top[1]))
        .and_then(|g| g.with_marker(Marker::Zero, layout.bottom[1]))
        .expect("markers are vertices");
    (g, layout)
}

/// Inner column `r_0..r_k` and outer column `s_1..s_k`: paths along both
/// columns plus the zigzag `r_{i-1} s_i r_i`, giving `2k - 1` triangles.
fn triangle_strip(pairs: &mut Vec<(VertexId, VertexId)>, inner: &[VertexId], outer: &[VertexId]) {
    for w in inner.windows(2) {
        pairs.push((w[0], w[1]));
    }
    for w in outer.windows(2) {
        pairs.push((w[0], w[1]));
    }
    for (i, &s) in outer.iter().enumerate() {
        pairs.push((inner[i], s));
        pairs.push((s, inner[i + 1]));
    }
}

/// Straight-line planar drawing: rails on `y = 1` and `y = 0`, strips on the
/// far left and right, apex high above the middle.
fn drawing(layout: &FamilyLayout) -> BTreeMap<VertexId, (f64, f64)> {
    let FamilyParams { k, l, m } = layout.params;
    let mut pos = BTreeMap::new();
    for (i, (&t, &b)) in layout.top.iter().zip(&layout.bottom).enumerate() {
        pos.insert(t, (i as f64, 1.0));
        pos.insert(b, (i as f64, 0.0));
    }
    let strip = |pos: &mut BTreeMap<VertexId, (f64, f64)>, inner: &[VertexId], outer: &[VertexId], x: f64, dx: f64, size: u32| {
        for (j, &r) in inner.iter().enumerate() {
            pos.insert(r, (x, 1.0 - (j + 1) as f64 / size as f64));
        }
        for (j, &s) in outer.iter().enumerate() {
            pos.insert(s, (x + dx, 1.0 - (j as f64 + 0.5) / size as f64));
        }
    };
    strip(&mut pos, &layout.left_inner, &layout.left_outer, 0.0, -1.0, k);
    strip(&mut pos, &layout.right_inner, &layout.right_outer, m as f64, 1.0, l);
    pos.insert(layout.apex, (m as f64 / 2.0, 10.0 + m as f64));
    pos
}

/// Planar dual of `G(k, l, m)` under the generated embedding.
pub fn family_dual(p: FamilyParams) -> Result<Multigraph> {
    planar_dual(&family_graph(p))
}
