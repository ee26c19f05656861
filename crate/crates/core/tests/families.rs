mod common;

use common::Naive;
use mldom_core::families::{self, GsLayout};
use mldom_core::harness::ld_gap_verdict;
use mldom_core::solver::{solve, solve_all, Invariant};
use mldom_core::transforms::bar_s;

#[test]
fn comb_values_and_pendant_swap() {
    for t in [2, 3] {
        let comb = families::gen_comb(t).unwrap();
        let g = &comb.graph;
        let o = Naive::of(g);
        let values = solve_all(g).values().unwrap();
        assert_eq!((values.gamma_m, values.psi, values.gamma), (t, t, t));
        assert_eq!(o.minimum(|s| o.mld(s)).len(), t);
        assert_eq!(o.minimum(|s| o.doubly_resolving(s)).len(), t);

        let s = solve(g, Invariant::GammaM).unwrap().witness;
        let swapped = bar_s(g, &s).unwrap();
        let bs: Vec<String> = (1..=t).map(|i| format!("b_{i}")).collect();
        let mut expected = comb.vertices(&bs.iter().map(String::as_str).collect::<Vec<_>>());
        expected.sort();
        assert_eq!(swapped.output_set.to_vec(), expected);
        assert!(swapped.certified);
        assert!(o.doubly_resolving(&expected));

        let a: Vec<usize> = (1..=t).map(|i| comb.vertex(&format!("a_{i}"))).collect();
        for i in 1..=t {
            let (ai, bi) = (
                comb.vertex(&format!("a_{i}")),
                comb.vertex(&format!("b_{i}")),
            );
            let resolved = a
                .iter()
                .any(|&u| a.iter().any(|&v| o.doubly_resolves(u, v, ai, bi)));
            assert!(!resolved, "a_{i}, b_{i} doubly resolved");
        }
    }
}

#[test]
fn g1_mld_set_and_gap() {
    let gs = families::gen_g_s(1).unwrap();
    let g = &gs.graph;
    let o = Naive::of(g);
    let set = gs.vertices(&["c_0", "c_1", "p", "b_0"]);
    assert!(o.mld(&set));
    let gamma_m = solve(g, Invariant::GammaM).unwrap().value;
    let gamma_l = solve(g, Invariant::GammaL).unwrap().value;
    assert!(gamma_m <= 4);
    assert!(gamma_l >= 3);
    assert_eq!(gamma_m, o.minimum(|s| o.mld(s)).len());
    assert_eq!(gamma_l, o.minimum(|s| o.ld(s)).len());
    assert!(ld_gap_verdict(gamma_m, gamma_l, "gs-1").holds);
}

#[test]
fn gs_layout_matches_labels() {
    for s in 1..=families::MAX_G_S {
        let gs = families::gen_g_s(s).unwrap();
        let layout = GsLayout { s };
        assert_eq!(gs.graph.n(), layout.n());
        assert_eq!(gs.vertex("p"), layout.p());
        assert_eq!(gs.vertex("a_0"), layout.a(0));
        assert_eq!(gs.vertex("b_1"), layout.b(1));
        assert_eq!(gs.vertex(&format!("c_{}", s)), layout.c(s as usize));
    }
    assert!(families::gen_g_s(0).is_err());
    assert!(families::gen_g_s(families::MAX_G_S + 1).is_err());
}

#[test]
fn seeded_generators_are_deterministic() {
    assert_eq!(
        families::gen_random_tree(10, 4).unwrap(),
        families::gen_random_tree(10, 4).unwrap()
    );
    assert_eq!(
        families::gen_random_connected(9, 0.3, 7).unwrap(),
        families::gen_random_connected(9, 0.3, 7).unwrap()
    );
}
