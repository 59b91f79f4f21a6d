use proptest::prelude::*;

use radio_block::center::distance_by_formula;
use radio_block::certificate::{certify, check_sufficient};
use radio_block::exact::exact_radio_number;
use radio_block::families::random_block_graph;
use radio_block::graph::is_block_graph;
use radio_block::line_graph::{line_graph_of_tree, line_obs_check};
use radio_block::radio::{
    greedy_min_labeling, labeling_from_ordering, lower_bound, validate_radio,
};
use radio_block::{BlockGraph, Graph, VertexOrdering};

fn block_graph(seed: u64, p: usize, clique: usize) -> Option<BlockGraph> {
    let bg = BlockGraph::analyze(random_block_graph(seed, p, clique)).unwrap();
    (bg.diameter() >= 2).then_some(bg)
}

/// A random block graph of diameter at least 2 together with a shuffled ordering.
fn graph_and_ordering(max_p: usize) -> impl Strategy<Value = (BlockGraph, VertexOrdering)> {
    (any::<u64>(), 3..=max_p, 2..=4usize)
        .prop_filter_map("diameter below 2", |(s, p, c)| block_graph(s, p, c))
        .prop_flat_map(|bg| {
            let ids: Vec<usize> = (0..bg.order()).collect();
            (Just(bg), Just(ids).prop_shuffle())
        })
        .prop_map(|(bg, ids)| {
            let p = bg.order();
            (bg, VertexOrdering::new(ids, p).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generator_builds_connected_block_graphs(seed: u64, p in 1..60usize, c in 2..6usize) {
        let g = random_block_graph(seed, p, c);
        prop_assert_eq!(g.order(), p);
        prop_assert!(g.is_connected());
        prop_assert!(is_block_graph(&g).unwrap());
    }

    #[test]
    fn distance_formula_matches_bfs(seed: u64, p in 2..40usize, c in 2..5usize) {
        let bg = BlockGraph::analyze(random_block_graph(seed, p, c)).unwrap();
        for u in 0..p {
            for v in 0..p {
                if u != v {
                    let gp = bg.geo_params(u, v);
                    prop_assert_eq!(distance_by_formula(&bg.levels, &gp, u, v), bg.distance(u, v));
                }
            }
        }
    }

    #[test]
    fn exact_characterizations_agree((bg, ord) in graph_and_ordering(12)) {
        let r = certify(&bg, &ord).unwrap();
        prop_assert_eq!(r.verdict.is_certified(), r.pair_gap_route());
        if r.verdict.is_certified() {
            prop_assert!(r.level_caps_route());
            prop_assert_eq!(r.span, Some(r.lb));
        }
    }

    #[test]
    fn sufficient_conditions_certify((bg, ord) in graph_and_ordering(12)) {
        if let Ok(s) = check_sufficient(&bg, &ord) {
            if s.any() {
                prop_assert!(certify(&bg, &ord).unwrap().verdict.is_certified());
            }
        }
    }

    #[test]
    fn greedy_is_valid_and_pointwise_minimal((bg, ord) in graph_and_ordering(12)) {
        let k = bg.diameter();
        let g = greedy_min_labeling(&bg.dist, &ord, k);
        prop_assert!(validate_radio(&bg.dist, &g, k).unwrap().is_valid());
        prop_assert!(g.span() >= lower_bound(&bg).unwrap());
        // the recurrence labeling never beats greedy along the same ordering
        let f = labeling_from_ordering(&bg, &ord).unwrap();
        if validate_radio(&bg.dist, &f, k).unwrap().is_valid() {
            for v in ord.iter() {
                prop_assert!(g.labels[v] <= f.labels[v]);
            }
        }
    }

    #[test]
    fn line_graph_identities(seed: u64, p in 3..40usize) {
        let t = random_block_graph(seed, p, 2);
        let lt = line_graph_of_tree(&t).unwrap();
        prop_assert_eq!(lt.graph.order(), p - 1);
        prop_assert!(line_obs_check(&t, &lt).unwrap().all());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_at_least_lower_bound(seed: u64, p in 3..=8usize, c in 2..=4usize) {
        if let Some(bg) = block_graph(seed, p, c) {
            let sol = exact_radio_number(&bg.dist, 10, None).unwrap();
            prop_assert!(sol.rn >= lower_bound(&bg).unwrap());
            prop_assert!(validate_radio(&bg.dist, &sol.witness, bg.diameter()).unwrap().is_valid());
            prop_assert_eq!(sol.witness.span(), sol.rn);
        }
    }
}

#[test]
fn four_cycle_is_not_a_block_graph() {
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(!is_block_graph(&g).unwrap());
}
