use std::collections::{BTreeMap, HashMap};

use crate::canon::{canonical_form, Certificate};
use crate::error::Result;
use crate::graph::{Multigraph, WeightedEdge};

use super::{require_expandable, GraphPolynomial};

type Terms = BTreeMap<u64, i64>;

/// Expands `Psi_G` by the recursion `Psi_G = alpha_e Psi_{G - e} + Psi_{G / e}`.
///
/// A bridge only contracts, a self-loop only deletes (contributing its
/// variable to every monomial). Minors are memoized on their canonical form,
/// with the stored polynomial written over canonical edge slots.
pub fn psi_del_contract(g: &Multigraph, max_edges: usize) -> Result<GraphPolynomial> {
    require_expandable(g, max_edges)?;
    let minor = Minor {
        vertex_count: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(bit, e)| (g.index_of(e.u).unwrap(), g.index_of(e.v).unwrap(), bit as u8))
            .collect(),
    };
    let terms = Recursion::default().psi(minor);
    GraphPolynomial::new(g.edges().iter().map(|e| e.id).collect(), terms)
}

#[derive(Clone)]
struct Minor {
    vertex_count: usize,
    /// `(u, v, variable bit)`
    edges: Vec<(usize, usize, u8)>,
}

impl Minor {
    fn delete(&self, index: usize) -> Minor {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Minor {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Merges the endpoints of edge `index`; other edges between them become loops.
    fn contract(&self, index: usize) -> Minor {
        let (u, v, _) = self.edges[index];
        let (keep, gone) = (u.min(v), u.max(v));
        let rename = |x: usize| match x {
            x if x == gone => keep,
            x if x > gone => x - 1,
            x => x,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &(a, b, bit))| (rename(a), rename(b), bit))
            .collect();
        Minor {
            vertex_count: self.vertex_count - 1,
            edges,
        }
    }

    fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        let mut components = self.vertex_count;
        for &(u, v, _) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
        components <= 1
    }
}

#[derive(Default)]
struct Recursion {
    memo: HashMap<Certificate, Terms>,
}

impl Recursion {
    fn psi(&mut self, minor: Minor) -> Terms {
        let loops: u64 = minor
            .edges
            .iter()
            .filter(|&&(u, v, _)| u == v)
            .fold(0, |acc, &(_, _, bit)| acc | 1 << bit);
        let loopless = Minor {
            vertex_count: minor.vertex_count,
            edges: minor.edges.into_iter().filter(|&(u, v, _)| u != v).collect(),
        };
        let terms = self.psi_loopless(loopless);
        if loops == 0 {
            terms
        } else {
            terms.into_iter().map(|(m, c)| (m | loops, c)).collect()
        }
    }

    fn psi_loopless(&mut self, minor: Minor) -> Terms {
        if !minor.is_connected() {
            return Terms::new();
        }
        if minor.edges.is_empty() {
            return Terms::from([(0, 1)]);
        }
        let slots = canonical_slots(&minor);
        if let Some(stored) = self.memo.get(&slots.certificate) {
            return stored
                .iter()
                .map(|(&m, &c)| (slots.edges_of(m), c))
                .collect();
        }

        let bit = minor.edges[0].2;
        let deleted = minor.delete(0);
        let mut terms = self.psi(minor.contract(0));
        if deleted.is_connected() {
            for (m, c) in self.psi(deleted) {
                *terms.entry(m | 1 << bit).or_default() += c;
            }
        }
        terms.retain(|_, c| *c != 0);

        let stored = terms.iter().map(|(&m, &c)| (slots.slots_of(m), c)).collect();
        self.memo.insert(slots.certificate, stored);
        terms
    }
}

/// Edge variables of a minor listed in canonical order, so that isomorphic
/// minors share one stored polynomial. Parallel edges tie; swapping them is
/// an automorphism and leaves `Psi` unchanged.
struct Slots {
    certificate: Certificate,
    bits: Vec<u8>,
}

impl Slots {
    fn slots_of(&self, m: u64) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|&(_, &b)| m >> b & 1 == 1)
            .fold(0, |acc, (slot, _)| acc | 1 << slot)
    }

    fn edges_of(&self, m: u64) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|&(slot, _)| m >> slot & 1 == 1)
            .fold(0, |acc, (_, &b)| acc | 1 << b)
    }
}

fn canonical_slots(minor: &Minor) -> Slots {
    let graph = Multigraph::new(
        0..minor.vertex_count as u32,
        minor
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v, _))| WeightedEdge::unit(i as u32, u as u32, v as u32)),
    )
    .expect("minor is a valid loopless graph");
    let form = canonical_form(&graph);
    let mut order: Vec<(u32, u32, usize)> = minor
        .edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v, _))| {
            let (a, b) = (form.relabeling[&(u as u32)], form.relabeling[&(v as u32)]);
            (a.min(b), a.max(b), i)
        })
        .collect();
    order.sort_unstable();
    Slots {
        certificate: form.certificate,
        bits: order.iter().map(|&(_, _, i)| minor.edges[i].2).collect(),
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
