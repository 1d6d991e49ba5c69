use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

use super::polynomial::full_mask;
use super::{require_expandable, GraphPolynomial};

/// Expands `Psi_G` by enumerating spanning trees with backtracking.
///
/// Edges are decided in id order; an edge is taken if it joins two current
/// components and skipped only if the remaining edges can still connect the
/// graph. Fails when the graph has more than `max_edges` edges.
pub fn psi_enumerate(g: &Multigraph, max_edges: usize) -> Result<GraphPolynomial> {
    require_expandable(g, max_edges)?;
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (g.index_of(e.u).unwrap(), g.index_of(e.v).unwrap()))
        .collect();
    let mut walk = TreeWalk {
        vertex_count: g.vertex_count(),
        full: full_mask(edges.len()),
        edges,
        monomials: BTreeMap::new(),
        duplicate: false,
    };
    let parent: Vec<usize> = (0..walk.vertex_count).collect();
    walk.visit(0, parent, 0, 0);
    if walk.duplicate {
        return Err(Error::Invariant("spanning tree enumerated twice".into()));
    }
    GraphPolynomial::new(g.edges().iter().map(|e| e.id).collect(), walk.monomials)
}

struct TreeWalk {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    full: u64,
    monomials: BTreeMap<u64, i64>,
    duplicate: bool,
}

impl TreeWalk {
    fn visit(&mut self, next: usize, parent: Vec<usize>, tree: u64, size: usize) {
        if size + 1 >= self.vertex_count {
            if self.monomials.insert(self.full & !tree, 1).is_some() {
                self.duplicate = true;
            }
            return;
        }
        if self.edges.len() - next < self.vertex_count - 1 - size {
            return;
        }
        let (u, v) = self.edges[next];
        let mut with = parent.clone();
        let (ru, rv) = (find(&mut with, u), find(&mut with, v));
        if ru != rv {
            with[ru] = rv;
            self.visit(next + 1, with, tree | 1 << next, size + 1);
        }
        if self.spans_without(next, &parent) {
            self.visit(next + 1, parent, tree, size);
        }
    }

    /// Whether the chosen tree edges plus every edge after `skipped` connect
    /// all vertices.
    fn spans_without(&self, skipped: usize, parent: &[usize]) -> bool {
        let mut p = parent.to_vec();
        let mut components = (0..self.vertex_count).filter(|&x| find(&mut p, x) == x).count();
        for &(u, v) in &self.edges[skipped + 1..] {
            let (ru, rv) = (find(&mut p, u), find(&mut p, v));
            if ru != rv {
                p[ru] = rv;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
