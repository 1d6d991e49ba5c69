use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::sample::Index;

use period_forge::canon::{canonical_form, is_isomorphic};
use period_forge::families::{family_dual, family_graph, zigzag, zigzag_completed, FamilyParams};
use period_forge::json::{graph_from_json, graph_to_json};
use period_forge::kirchhoff::{psi_del_contract, psi_enumerate, psi_eval, spanning_tree_count};
use period_forge::transforms::{complete, faces, planar_dual};
use period_forge::{EdgeId, Multigraph};

fn connected_multigraph(max_vertices: u32, max_edges: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_vertices)
        .prop_flat_map(move |n| {
            let tree = proptest::collection::vec(any::<Index>(), (n - 1) as usize);
            let extra = proptest::collection::vec((0..n, 0..n), 0..=max_edges - (n - 1) as usize);
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut pairs: Vec<(u32, u32)> = tree
                .iter()
                .enumerate()
                .map(|(i, idx)| (idx.index(i + 1) as u32, i as u32 + 1))
                .collect();
            pairs.extend(extra.into_iter().filter(|(u, v)| u != v));
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
}

fn family_params(max_total: u32) -> impl Strategy<Value = FamilyParams> {
    proptest::sample::select(FamilyParams::all_up_to(max_total))
}

fn permuted(g: &Multigraph, order: &[u32]) -> Multigraph {
    let map: BTreeMap<u32, u32> = g.vertices().iter().copied().zip(order.iter().copied()).collect();
    g.relabeled(|v| map[&v]).unwrap()
}

fn shuffled_labels(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).map(|i| 3 * i + 7).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_labels(order in shuffled_labels(7)) {
        let g = zigzag_completed(5).unwrap();
        let h = permuted(&g, &order);
        prop_assert_eq!(canonical_form(&g).certificate, canonical_form(&h).certificate);
    }

    #[test]
    fn canonical_form_ignores_labels_on_random_graphs(
        g in connected_multigraph(6, 9),
        seed in any::<u64>(),
    ) {
        let mut order: Vec<u32> = (0..g.vertex_count() as u32).collect();
        // deterministic rotation plus reversal as a cheap relabeling
        order.rotate_left((seed % g.vertex_count() as u64) as usize);
        if seed % 2 == 1 {
            order.reverse();
        }
        let h = permuted(&g, &order);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&h, &g));
        prop_assert!(is_isomorphic(&g, &g));
    }

    #[test]
    fn handshake(g in connected_multigraph(7, 12)) {
        let degrees: i64 = g.vertices().iter().map(|&v| g.weighted_degree(v).unwrap()).sum();
        prop_assert_eq!(degrees, 2 * g.total_weight());
    }

    #[test]
    fn handshake_after_completion(p in family_params(6)) {
        let g = complete(&family_graph(p)).unwrap();
        let degrees: i64 = g.vertices().iter().map(|&v| g.weighted_degree(v).unwrap()).sum();
        prop_assert_eq!(degrees, 2 * g.total_weight());
        prop_assert_eq!(degrees, 4 * g.vertex_count() as i64);
    }

    #[test]
    fn backends_agree(g in connected_multigraph(6, 8)) {
        let a = psi_enumerate(&g, 24).unwrap();
        let b = psi_del_contract(&g, 24).unwrap();
        prop_assert_eq!(a.len().to_string(), spanning_tree_count(&g).unwrap().to_string());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn psi_is_homogeneous_of_degree_h(
        g in connected_multigraph(6, 10),
        values in proptest::collection::vec(0.05f64..5.0, 10),
        lambda in 0.1f64..10.0,
    ) {
        let h = g.loop_number().unwrap() as i32;
        let point: BTreeMap<EdgeId, f64> =
            g.edges().iter().zip(&values).map(|(e, &x)| (e.id, x)).collect();
        let scaled: BTreeMap<EdgeId, f64> = point.iter().map(|(&e, &x)| (e, lambda * x)).collect();
        let base = psi_eval(&g, &point).unwrap();
        let lifted = psi_eval(&g, &scaled).unwrap();
        prop_assert!((lifted / (lambda.powi(h) * base) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn json_round_trip(p in family_params(5)) {
        for g in [family_graph(p), complete(&family_graph(p)).unwrap(), family_dual(p).unwrap()] {
            let text = graph_to_json(&g);
            let back = graph_from_json(&text).unwrap();
            prop_assert_eq!(graph_to_json(&back), text);
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn family_mirror(p in family_params(6)) {
        let mirror = FamilyParams::new(p.l(), p.k(), p.m()).unwrap();
        prop_assert!(is_isomorphic(&family_graph(p), &family_graph(mirror)));
    }

    #[test]
    fn family_rotation_satisfies_euler(p in family_params(6)) {
        let g = family_graph(p);
        let f = faces(&g).unwrap().len() as i64;
        prop_assert_eq!(g.vertex_count() as i64 - g.edge_count() as i64 + f, 2);
    }

    #[test]
    fn double_dual_is_original(p in family_params(5)) {
        let g = family_graph(p);
        let back = planar_dual(&planar_dual(&g).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&g.clone().without_markers(), &back));
        let ids = |g: &Multigraph| g.edges().iter().map(|e| e.id).collect::<Vec<_>>();
        prop_assert_eq!(ids(&g), ids(&back));
    }
}

#[test]
fn family_counts() {
    for p in FamilyParams::all_up_to(6) {
        let g = family_graph(p);
        assert_eq!(g.vertex_count() as u32, p.n() + 1, "{p}");
        assert_eq!(g.edge_count() as u32, 2 * p.n(), "{p}");
        assert_eq!(g.loop_number().unwrap() as u32, p.n(), "{p}");
        let mut degrees: Vec<usize> = g.vertices().iter().map(|&v| g.degree(v).unwrap()).collect();
        degrees.sort_unstable();
        let threes = (p.m() + 3) as usize;
        let mut expected = vec![3; threes];
        expected.extend(vec![4; g.vertex_count() - threes - 1]);
        expected.push(threes);
        expected.sort_unstable();
        assert_eq!(degrees, expected, "{p}");
    }
}

#[test]
fn completed_zigzags_are_four_regular() {
    for n in 3..=20 {
        let g = zigzag_completed(n).unwrap();
        assert_eq!(g.vertex_count() as u32, n + 2);
        for &v in g.vertices() {
            assert_eq!(g.weighted_degree(v).unwrap(), 4, "n = {n}");
        }
        let z = zigzag(n).unwrap();
        assert_eq!(z.edge_count() as u32, 2 * n);
        assert_eq!(z.loop_number().unwrap() as u32, n);
    }
}

#[test]
fn family_with_one_rung_is_a_zigzag() {
    for total in 2..=6 {
        for k in 1..total {
            let l = total - k;
            let g = family_graph(FamilyParams::new(k, l, 1).unwrap());
            assert!(is_isomorphic(&g, &zigzag(2 * k + 2 * l + 2).unwrap()), "({k}, {l}, 1)");
        }
    }
}

#[test]
fn dual_polynomial_is_complement() {
    for p in FamilyParams::all_up_to(4) {
        let g = family_graph(p);
        let dual = planar_dual(&g).unwrap();
        assert_eq!(
            psi_enumerate(&dual, 24).unwrap(),
            psi_enumerate(&g, 24).unwrap().complement(),
            "{p}"
        );
    }
}

/// Ladder of `m + 1` boxes whose four corners and `m` inner top vertices all
/// meet one extra vertex.
fn boxed_ladder(m: u32) -> Multigraph {
    let len = m + 2;
    let (bottom, top, hub) = (|i: u32| i, |i: u32| len + i, 2 * len);
    let mut pairs = Vec::new();
    for i in 0..len {
        pairs.push((bottom(i), top(i)));
        if i + 1 < len {
            pairs.push((bottom(i), bottom(i + 1)));
            pairs.push((top(i), top(i + 1)));
        }
    }
    for v in [bottom(0), top(0), bottom(len - 1), top(len - 1)] {
        pairs.push((v, hub));
    }
    for i in 1..len - 1 {
        pairs.push((top(i), hub));
    }
    Multigraph::from_pairs(2 * len + 1, &pairs).unwrap()
}

#[test]
fn dual_of_ladder_family_is_boxed_ladder() {
    for m in 1..=6 {
        let dual = family_dual(FamilyParams::new(1, 1, m).unwrap()).unwrap();
        assert!(is_isomorphic(&dual, &boxed_ladder(m)), "m = {m}");
    }
}

#[test]
fn dual_degrees() {
    for p in FamilyParams::all_up_to(7) {
        let dual = family_dual(p).unwrap();
        let mut degrees: Vec<usize> = dual.vertices().iter().map(|&v| dual.degree(v).unwrap()).collect();
        degrees.sort_unstable();
        let (k, l, m) = (p.k() as usize, p.l() as usize, p.m() as usize);
        let mut expected = vec![k + l + m + 2];
        expected.extend(vec![3; 2 * (k + l) + m]);
        if m == 1 {
            expected.push(k + l + 2);
        } else {
            expected.extend([k + 3, l + 3]);
            expected.extend(vec![4; m - 2]);
        }
        expected.sort_unstable();
        assert_eq!(degrees, expected, "{p}");
    }
}
