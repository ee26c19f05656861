use mldom_core::predicates::{is_dominating, is_doubly_resolving, is_ld, is_mld, is_resolving};
use mldom_core::{families, Graph, VertexSet};
use proptest::prelude::*;

fn graph_set_extra() -> impl Strategy<Value = (Graph, VertexSet, usize)> {
    (3usize..=9, any::<u64>(), 0.15f64..0.8).prop_flat_map(|(n, seed, p)| {
        let g = families::gen_random_connected(n, p, seed).unwrap();
        (Just(g), any::<u64>(), 0..n).prop_map(move |(g, mask, extra)| {
            let mut s = VertexSet::from_mask(n, mask);
            if s.len() < 2 {
                s.insert(0);
                s.insert(1);
            }
            (g, s, extra)
        })
    })
}

proptest! {
    #[test]
    fn supersets_keep_every_property((g, s, extra) in graph_set_extra()) {
        let mut bigger = s.clone();
        bigger.insert(extra);
        if is_dominating(&g, &s).holds() {
            prop_assert!(is_dominating(&g, &bigger).holds());
        }
        if is_resolving(&g, &s).unwrap().holds() {
            prop_assert!(is_resolving(&g, &bigger).unwrap().holds());
        }
        if is_doubly_resolving(&g, &s).unwrap().holds() {
            prop_assert!(is_doubly_resolving(&g, &bigger).unwrap().holds());
        }
        if is_mld(&g, &s).unwrap().holds() {
            prop_assert!(is_mld(&g, &bigger).unwrap().holds());
        }
        if is_ld(&g, &s).unwrap().holds() {
            prop_assert!(is_ld(&g, &bigger).unwrap().holds());
        }
    }

    #[test]
    fn ld_implies_mld_implies_resolving((g, s, _) in graph_set_extra()) {
        let ld = is_ld(&g, &s).unwrap().holds();
        let mld = is_mld(&g, &s).unwrap().holds();
        let resolving = is_resolving(&g, &s).unwrap().holds();
        prop_assert!(!ld || mld);
        prop_assert!(!mld || resolving);
        prop_assert_eq!(mld, resolving && is_dominating(&g, &s).holds());
    }

    #[test]
    fn doubly_resolving_implies_resolving((g, s, _) in graph_set_extra()) {
        if is_doubly_resolving(&g, &s).unwrap().holds() {
            prop_assert!(is_resolving(&g, &s).unwrap().holds());
        }
    }

    #[test]
    fn failure_witnesses_are_genuine((g, s, _) in graph_set_extra()) {
        let d = g.distances();
        if let Some(f) = is_resolving(&g, &s).unwrap().failure() {
            let mldom_core::Witness::Pair(x, y) = f.witness else { panic!("resolving failure without a pair") };
            prop_assert!(s.iter().all(|u| d.get(u, x) == d.get(u, y)));
        }
        if let Some(f) = is_dominating(&g, &s).failure() {
            let mldom_core::Witness::Vertex(w) = f.witness else { panic!("domination failure without a vertex") };
            prop_assert!(!s.contains(w) && g.neighbors(w).iter().all(|&u| !s.contains(u)));
        }
    }
}
