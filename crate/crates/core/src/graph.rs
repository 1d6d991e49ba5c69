//! Weighted multigraphs with optional combinatorial embedding and marker
//! vertices.
//!
//! An edge of weight `+1` is an ordinary propagator. A negative weight `-w`
//! records an inverse propagator of weight `w`; such edges only take part in
//! degree bookkeeping. Self-loops are rejected.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Named vertices used by the twist identity.
///
/// Variant order is the serialization order of marker maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marker {
    A,
    B,
    Infinity,
    Zero,
}

impl Marker {
    pub fn name(self) -> &'static str {
        match self {
            Marker::A => "a",
            Marker::B => "b",
            Marker::Infinity => "infinity",
            Marker::Zero => "zero",
        }
    }
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightedEdge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: i64,
}

impl WeightedEdge {
    pub fn new(id: EdgeId, u: VertexId, v: VertexId, weight: i64) -> Self {
        WeightedEdge { id, u, v, weight }
    }

    pub fn unit(id: EdgeId, u: VertexId, v: VertexId) -> Self {
        WeightedEdge::new(id, u, v, 1)
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }
}

pub type Rotation = BTreeMap<VertexId, Vec<EdgeId>>;

/// Immutable weighted multigraph.
///
/// Vertices are kept sorted ascending and edges sorted by id, so iteration
/// order (and therefore serialized output) is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<WeightedEdge>,
    rotation: Option<Rotation>,
    markers: BTreeMap<Marker, VertexId>,
}

impl Multigraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = WeightedEdge>,
    ) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut edges: Vec<WeightedEdge> = edges.into_iter().collect();
        edges.sort_by_key(|e| e.id);
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateEdge(w[0].id));
        }
        for e in &edges {
            for x in [e.u, e.v] {
                if vertices.binary_search(&x).is_err() {
                    return Err(Error::UnknownVertex(x));
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.id));
            }
            if e.weight == 0 {
                return Err(Error::ZeroWeight(e.id));
            }
        }
        Ok(Multigraph {
            vertices,
            edges,
            rotation: None,
            markers: BTreeMap::new(),
        })
    }

    /// Vertices `0..n` and unit-weight edges numbered in the given order.
    pub fn from_pairs(n: u32, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| WeightedEdge::unit(i as EdgeId, u, v));
        Multigraph::new(0..n, edges)
    }

    pub fn with_marker(mut self, marker: Marker, v: VertexId) -> Result<Self> {
        self.require_vertex(v)?;
        self.markers.insert(marker, v);
        Ok(self)
    }

    pub fn with_markers(mut self, markers: &BTreeMap<Marker, VertexId>) -> Result<Self> {
        for (&m, &v) in markers {
            self = self.with_marker(m, v)?;
        }
        Ok(self)
    }

    pub fn without_markers(mut self) -> Self {
        self.markers.clear();
        self
    }

    /// Attaches a rotation system after checking that every vertex lists each
    /// of its incident edges exactly once.
    pub fn with_rotation(mut self, rotation: Rotation) -> Result<Self> {
        for (&v, cycle) in &rotation {
            self.require_vertex(v)?;
            let mut listed: Vec<EdgeId> = cycle.clone();
            listed.sort_unstable();
            let expected: Vec<EdgeId> = self.incident_edges(v).map(|e| e.id).collect();
            if listed != expected {
                return Err(Error::InvalidRotation {
                    vertex: v,
                    reason: format!("lists {listed:?}, incident edges are {expected:?}"),
                });
            }
        }
        for &v in &self.vertices {
            if !rotation.contains_key(&v) && self.incident_edges(v).next().is_some() {
                return Err(Error::InvalidRotation {
                    vertex: v,
                    reason: "missing cyclic order".into(),
                });
            }
        }
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    /// Rotation system of a straight-line drawing: incident edges ordered
    /// counterclockwise by angle. Parallel edges tie and are kept in id order,
    /// which is only meaningful for drawings without parallel edges.
    pub fn with_rotation_from_positions(
        self,
        positions: &BTreeMap<VertexId, (f64, f64)>,
    ) -> Result<Self> {
        let mut rotation = Rotation::new();
        for &v in &self.vertices {
            let &(x0, y0) = positions.get(&v).ok_or(Error::UnknownVertex(v))?;
            let mut around: Vec<(f64, EdgeId)> = Vec::new();
            for e in self.incident_edges(v) {
                let w = e.other(v).expect("incident");
                let &(x1, y1) = positions.get(&w).ok_or(Error::UnknownVertex(w))?;
                around.push(((y1 - y0).atan2(x1 - x0), e.id));
            }
            around.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            rotation.insert(v, around.into_iter().map(|(_, id)| id).collect());
        }
        self.with_rotation(rotation)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn rotation(&self) -> Option<&Rotation> {
        self.rotation.as_ref()
    }

    pub fn markers(&self) -> &BTreeMap<Marker, VertexId> {
        &self.markers
    }

    pub fn marker(&self, m: Marker) -> Option<VertexId> {
        self.markers.get(&m).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&WeightedEdge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted vertex list.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub(crate) fn require_vertex(&self, v: VertexId) -> Result<usize> {
        self.index_of(v).ok_or(Error::UnknownVertex(v))
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &WeightedEdge> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    pub fn next_vertex_id(&self) -> VertexId {
        self.vertices.last().map_or(0, |&v| v + 1)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        self.edges.last().map_or(0, |e| e.id + 1)
    }

    /// Sum of the weights of the edges incident to `v`.
    pub fn weighted_degree(&self, v: VertexId) -> Result<i64> {
        self.require_vertex(v)?;
        Ok(self.incident_edges(v).map(|e| e.weight).sum())
    }

    /// Number of incident edges, counting parallel edges separately.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.require_vertex(v)?;
        Ok(self.incident_edges(v).count())
    }

    pub fn total_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Fails on the first edge whose weight is not `+1`.
    pub fn require_ordinary(&self) -> Result<()> {
        match self.edges.iter().find(|e| e.weight != 1) {
            Some(e) => Err(Error::NotOrdinary {
                edge: e.id,
                weight: e.weight,
            }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components_avoiding(&BTreeSet::new()).len() <= 1
    }

    /// First Betti number `E - V + 1` of a connected ordinary graph.
    pub fn loop_number(&self) -> Result<usize> {
        self.require_ordinary()?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edge_count() + 1 - self.vertex_count().max(1))
    }

    /// Connected components of the graph with the `cut` vertices (and every
    /// edge touching them) removed, ordered by smallest member.
    pub fn split_by_cut(&self, cut: &[VertexId]) -> Result<Vec<BTreeSet<VertexId>>> {
        let mut set = BTreeSet::new();
        for &c in cut {
            self.require_vertex(c)?;
            if !set.insert(c) {
                return Err(Error::InvalidCut(format!("vertex {c} listed twice")));
            }
        }
        Ok(self.components_avoiding(&set))
    }

    fn components_avoiding(&self, removed: &BTreeSet<VertexId>) -> Vec<BTreeSet<VertexId>> {
        let n = self.vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for e in &self.edges {
            let (i, j) = (self.index_of(e.u).unwrap(), self.index_of(e.v).unwrap());
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        let mut seen: Vec<bool> = self.vertices.iter().map(|v| removed.contains(v)).collect();
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                component.insert(self.vertices[i]);
                for &j in &adjacency[i] {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            out.push(component);
        }
        out
    }

    /// Renames vertices through `f`, which must be injective on the vertex set.
    /// Edge ids, weights, markers and the rotation system follow along.
    pub fn relabeled(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|e| WeightedEdge::new(e.id, f(e.u), f(e.v), e.weight));
        let mut g = Multigraph::new(self.vertices.iter().map(|&v| f(v)), edges)?;
        if let Some(rot) = &self.rotation {
            g = g.with_rotation(rot.iter().map(|(&v, c)| (f(v), c.clone())).collect())?;
        }
        for (&m, &v) in &self.markers {
            g = g.with_marker(m, f(v))?;
        }
        Ok(g)
    }

    /// Removes `v` and every edge touching it. Markers pointing at `v` are
    /// dropped, as is the rotation system.
    pub fn without_vertex(&self, v: VertexId) -> Result<Self> {
        self.require_vertex(v)?;
        let mut g = Multigraph::new(
            self.vertices.iter().copied().filter(|&x| x != v),
            self.edges.iter().copied().filter(|e| !e.touches(v)),
        )?;
        for (&m, &x) in &self.markers {
            if x != v {
                g.markers.insert(m, x);
            }
        }
        Ok(g)
    }
}
