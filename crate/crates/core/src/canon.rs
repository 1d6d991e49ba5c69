//! Canonical labeling of weighted multigraphs by color refinement with
//! individualization and backtracking.
//!
//! Colors are refined by the multiset of `(neighbor color, edge weight)`
//! pairs until stable. When the stable partition is not discrete, each
//! vertex of the first non-singleton cell is individualized in turn. The
//! canonical certificate is the lexicographically smallest relabeled edge
//! list over all leaves of the search tree. Subtrees that are images of an
//! explored sibling under an automorphism already found are skipped.
//!
//! Markers, edge ids and rotation systems do not take part in the comparison.

use std::collections::BTreeMap;

use crate::graph::{Multigraph, VertexId};

/// Relabeled edge list `(min label, max label, weight)`, sorted, plus the
/// vertex count. Equal certificates mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub vertex_count: usize,
    pub edges: Vec<(u32, u32, i64)>,
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Canonical label of every vertex.
    pub relabeling: BTreeMap<VertexId, u32>,
    pub certificate: Certificate,
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let search = Search::new(g);
    let (certificate, labels) = search.run();
    let relabeling = g
        .vertices()
        .iter()
        .zip(labels)
        .map(|(&v, l)| (v, l))
        .collect();
    CanonicalForm {
        relabeling,
        certificate,
    }
}

pub fn is_isomorphic(g1: &Multigraph, g2: &Multigraph) -> bool {
    isomorphism(g1, g2).is_some()
}

/// A vertex bijection `g1 -> g2` that carries the weighted edge multiset of
/// `g1` onto that of `g2`, if one exists.
pub fn isomorphism(g1: &Multigraph, g2: &Multigraph) -> Option<BTreeMap<VertexId, VertexId>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.certificate != c2.certificate {
        return None;
    }
    let by_label: BTreeMap<u32, VertexId> = c2.relabeling.iter().map(|(&v, &l)| (l, v)).collect();
    Some(
        c1.relabeling
            .iter()
            .map(|(&v, l)| (v, by_label[l]))
            .collect(),
    )
}

struct Search {
    n: usize,
    adjacency: Vec<Vec<(usize, i64)>>,
    edges: Vec<(usize, usize, i64)>,
    best: Option<(Certificate, Vec<u32>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let i = g.index_of(e.u).expect("endpoint");
            let j = g.index_of(e.v).expect("endpoint");
            adjacency[i].push((j, e.weight));
            adjacency[j].push((i, e.weight));
            edges.push((i, j, e.weight));
        }
        Search {
            n,
            adjacency,
            edges,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> (Certificate, Vec<u32>) {
        let colors = self.refine(vec![0; self.n]);
        self.descend(colors, &mut Vec::new());
        self.best.expect("search visits at least one leaf")
    }

    /// Splits color classes until the partition is equitable. Colors are
    /// ranks of sorted signatures, so the result is labeling-invariant.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(u32, Vec<(u32, i64)>)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<(u32, i64)> = self.adjacency[v]
                        .iter()
                        .map(|&(u, w)| (colors[u], w))
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<(u32, i64)>)> = signatures.iter().collect();
            distinct.sort();
            distinct.dedup();
            colors = signatures
                .iter()
                .map(|s| distinct.binary_search(&s).expect("present") as u32)
                .collect();
            if distinct.len() == classes {
                return colors;
            }
            classes = distinct.len();
        }
    }

    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) {
        let Some(target) = first_nontrivial_cell(&colors) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(path, &explored, w) {
                continue;
            }
            let individualized = individualize(&colors, w);
            let refined = self.refine(individualized);
            path.push(w);
            self.descend(refined, path);
            path.pop();
            explored.push(w);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let mut edges: Vec<(u32, u32, i64)> = self
            .edges
            .iter()
            .map(|&(i, j, w)| {
                let (a, b) = (colors[i], colors[j]);
                (a.min(b), a.max(b), w)
            })
            .collect();
        edges.sort_unstable();
        let certificate = Certificate {
            vertex_count: self.n,
            edges,
        };
        match &self.best {
            None => self.best = Some((certificate, colors.to_vec())),
            Some((best, best_labels)) => match certificate.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((certificate, colors.to_vec())),
                std::cmp::Ordering::Equal => {
                    let mut vertex_of_label = vec![0usize; self.n];
                    for (v, &l) in best_labels.iter().enumerate() {
                        vertex_of_label[l as usize] = v;
                    }
                    let automorphism: Vec<usize> =
                        colors.iter().map(|&l| vertex_of_label[l as usize]).collect();
                    if automorphism.iter().enumerate().any(|(v, &u)| v != u) {
                        self.automorphisms.push(automorphism);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Whether `w` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn equivalent_to_explored(&self, path: &[usize], explored: &[usize], w: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (v, &image) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&v| find(&mut parent, v) == root)
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn first_nontrivial_cell(colors: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

/// Gives `w` its own color ahead of the rest of its cell.
fn individualize(colors: &[u32], w: usize) -> Vec<u32> {
    let keys: Vec<(u32, bool)> = colors
        .iter()
        .enumerate()
        .map(|(v, &c)| (c, v != w))
        .collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present") as u32)
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
