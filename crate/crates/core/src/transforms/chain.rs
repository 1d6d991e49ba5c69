use std::collections::BTreeMap;

use crate::canon::{is_isomorphic, isomorphism};
use crate::error::{Error, Result};
use crate::families::{family_graph_with_layout, zigzag, FamilyParams};
use crate::graph::{Marker, Multigraph, VertexId};

use super::{complete, decomplete, twist, TwistCut};

/// One completion/twist/decompletion round of the reduction.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub from: FamilyParams,
    pub to: FamilyParams,
    pub completed: Multigraph,
    pub twisted: Multigraph,
    pub t1: i64,
    pub t2: i64,
    /// Twisted graph is isomorphic to the completion of `G(to)`.
    pub twisted_matches: bool,
    pub decompleted: Multigraph,
    /// Decompleted graph is isomorphic to `G(to)`.
    pub decompleted_matches: bool,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub params: FamilyParams,
    pub initial: Multigraph,
    pub steps: Vec<ChainStep>,
    pub terminal: Multigraph,
    /// Loop number of the zig-zag graph the chain should end on.
    pub zigzag_loops: u32,
    pub terminal_matches_zigzag: bool,
    pub verdict: bool,
}

/// Runs `m - 1` twist steps taking `G(k, l, m)` to `G(k + m - 1, l, 1)` and
/// checks the end point against the zig-zag graph with `2(k + l + m)` loops.
///
/// Each step completes the current graph, twists the component holding the
/// top of the left triangle strip at the cut `(a, b, zero, infinity)`, and
/// removes `infinity` again. The result is compared with the next family
/// member; the markers for the following step are carried over through the
/// isomorphism witness. A failed comparison ends the chain with verdict
/// `false`.
pub fn reduce_to_zigzag(p: FamilyParams) -> Result<ChainReport> {
    let (initial, layout) = family_graph_with_layout(p);
    let mut current = initial.clone();
    let mut side: VertexId = layout.left_top_outer();
    let mut steps = Vec::new();
    let mut ok = true;

    for i in 1..p.m() {
        let from = FamilyParams::new(p.k() + i - 1, p.l(), p.m() - i + 1)?;
        let to = FamilyParams::new(p.k() + i, p.l(), p.m() - i)?;
        let completed = complete(&current)?;
        let cut = TwistCut::from_markers(&completed)?;
        let twisted = twist(&completed, cut, side)?;
        let (reference, reference_layout) = family_graph_with_layout(to);
        let twisted_matches = is_isomorphic(&twisted.graph, &complete(&reference)?);
        let decompleted = decomplete(&twisted.graph, cut.infinity)?;
        let witness = isomorphism(&reference, &decompleted);
        steps.push(ChainStep {
            from,
            to,
            completed,
            twisted: twisted.graph,
            t1: twisted.t1,
            t2: twisted.t2,
            twisted_matches,
            decompleted: decompleted.clone(),
            decompleted_matches: witness.is_some(),
        });
        ok &= twisted_matches;
        let Some(witness) = witness else {
            ok = false;
            break;
        };
        current = carry_markers(&decompleted, &reference, &witness)?;
        side = witness[&reference_layout.left_top_outer()];
    }

    let n = p.n();
    let terminal_matches_zigzag = ok && is_isomorphic(&current, &zigzag(n)?);
    Ok(ChainReport {
        params: p,
        initial,
        steps,
        terminal: current,
        zigzag_loops: n,
        terminal_matches_zigzag,
        verdict: ok && terminal_matches_zigzag,
    })
}

/// Places the markers of `reference` on `target` through `witness`.
fn carry_markers(
    target: &Multigraph,
    reference: &Multigraph,
    witness: &BTreeMap<VertexId, VertexId>,
) -> Result<Multigraph> {
    let mut out = target.clone().without_markers();
    for m in [Marker::A, Marker::B, Marker::Zero] {
        let v = reference
            .marker(m)
            .ok_or_else(|| Error::Invariant(format!("reference graph lacks marker {m}")))?;
        out = out.with_marker(m, witness[&v])?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(k: u32, l: u32, m: u32) -> ChainReport {
        reduce_to_zigzag(FamilyParams::new(k, l, m).unwrap()).unwrap()
    }

    #[test]
    fn m1_needs_no_twist() {
        let r = run(1, 1, 1);
        assert!(r.steps.is_empty());
        assert!(r.verdict);
        assert_eq!(r.zigzag_loops, 6);
    }

    #[test]
    fn one_twist_reaches_z8() {
        let r = run(1, 1, 2);
        assert_eq!(r.steps.len(), 1);
        assert_eq!((r.steps[0].t1, r.steps[0].t2), (0, 1));
        assert!(r.verdict);
        assert!(is_isomorphic(&r.terminal, &zigzag(8).unwrap()));
    }

    #[test]
    fn two_twists_reach_z14() {
        let r = run(2, 2, 3);
        assert_eq!(r.steps.len(), 2);
        assert!(r.steps.iter().all(|s| s.twisted_matches && s.decompleted_matches));
        assert!(r.verdict);
        assert_eq!(r.zigzag_loops, 14);
    }
}
