mod common;

use cfcol::io::{parse_graph, save_graph, GraphFormat};
use cfcol::{
    back_reach_profile, degeneracy_order, exact_scol, generate, greedy_cf_colouring, reach_set,
    verify_colouring, Colouring, Criterion, GenSpec, Graph, VertexOrdering,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_spec() -> impl Strategy<Value = GenSpec> {
    prop_oneof![
        (1usize..30).prop_map(|n| GenSpec::Path { n }),
        (3usize..30).prop_map(|n| GenSpec::Cycle { n }),
        (1usize..10).prop_map(|n| GenSpec::Complete { n }),
        (0usize..20).prop_map(|leaves| GenSpec::Star { leaves }),
        (0usize..6, 1usize..6).prop_map(|(a, b)| GenSpec::CompleteBipartite { a, b }),
        (1usize..8, 1usize..8).prop_map(|(rows, cols)| GenSpec::Grid { rows, cols }),
        (1usize..25, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| GenSpec::Gnp {
            n,
            p,
            seed
        }),
        (3usize..60, any::<u64>()).prop_map(|(n, seed)| GenSpec::Planar3Tree { n, seed }),
    ]
}

fn arb_ordered_graph(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    (arb_graph(max_n), any::<u64>()).prop_map(|(g, seed)| {
        let ord = VertexOrdering::random(g.n(), seed);
        (g, ord)
    })
}

proptest! {
    #[test]
    fn generated_graphs_are_simple_and_round_trip(spec in arb_spec()) {
        let g = generate(&spec).unwrap();
        prop_assert!(g.is_consistent());
        prop_assert_eq!(&generate(&spec).unwrap(), &g);
        for f in [GraphFormat::Edgelist, GraphFormat::Dimacs] {
            prop_assert_eq!(&parse_graph(&save_graph(&g, f), f).unwrap(), &g);
        }
        if let GenSpec::Planar3Tree { n, .. } = spec {
            prop_assert_eq!(g.m(), 3 * n - 6);
            if n >= 4 {
                prop_assert_eq!(degeneracy_order(&g).1, 3);
            }
        }
    }

    #[test]
    fn reach_set_basic_invariants((g, ord) in arb_ordered_graph(9)) {
        for v in g.vertices() {
            let mut previous: Vec<usize> = Vec::new();
            for s in 1..=4 {
                let r = reach_set(&g, &ord, v, s).unwrap();
                prop_assert!(r.contains(&v));
                prop_assert!(r.iter().all(|&w| ord.pos(w) <= ord.pos(v)));
                prop_assert!(previous.iter().all(|w| r.contains(w)));
                if s == 1 {
                    let mut expected: Vec<usize> =
                        g.neighbours(v).iter().copied().filter(|&w| ord.precedes(w, v)).collect();
                    expected.push(v);
                    expected.sort_unstable();
                    prop_assert_eq!(&r, &expected);
                }
                previous = r;
            }
        }
        let first = ord.seq().first().copied();
        if let Some(v) = first {
            prop_assert_eq!(reach_set(&g, &ord, v, 3).unwrap(), vec![v]);
        }
    }

    #[test]
    fn reach_set_matches_path_enumeration((g, ord) in arb_ordered_graph(8), s in 1usize..=3) {
        for v in g.vertices() {
            let fast: Vec<usize> = reach_set(&g, &ord, v, s).unwrap();
            let slow: Vec<usize> = common::reach_by_paths(&g, &ord, v, s).into_iter().collect();
            prop_assert_eq!(fast, slow);
        }
    }

    #[test]
    fn greedy_is_proper_conflict_free_and_within_bound((g, ord) in arb_ordered_graph(12)) {
        let col = greedy_cf_colouring(&g, &ord);
        let r2 = back_reach_profile(&g, &ord, 2).unwrap().max;
        for c in Criterion::ALL {
            prop_assert!(verify_colouring(&g, &col, c).unwrap().ok);
        }
        if g.n() > 0 {
            prop_assert!(col.used() as usize <= (2 * r2 - 1).max(1));
            prop_assert_eq!(col.palette() as usize, (2 * r2 - 1).max(1));
        }
        prop_assert_eq!(greedy_cf_colouring(&g, &ord), col);
    }

    #[test]
    fn conflict_free_implies_odd(g in arb_graph(7), seed in any::<u64>(), palette in 1u32..5) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let colours: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(1..=palette)).collect();
        let col = Colouring::new(colours, palette).unwrap();
        if verify_colouring(&g, &col, Criterion::ConflictFree).unwrap().ok {
            prop_assert!(verify_colouring(&g, &col, Criterion::Odd).unwrap().ok);
        }
    }

    #[test]
    fn scol_monotone_in_radius_and_subgraphs(g in arb_graph(7), keep_seed in any::<u64>()) {
        let values: Vec<usize> = (1..=3).map(|s| exact_scol(&g, s, 10).unwrap().0).collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(values[0], if g.n() == 0 { 0 } else { degeneracy_order(&g).1 + 1 });
        let h = g.edge_subgraph(|u, v| (keep_seed >> ((u * 7 + v) % 64)) & 1 == 1);
        for s in 1..=3 {
            prop_assert!(exact_scol(&h, s, 10).unwrap().0 <= values[s - 1]);
        }
    }

    #[test]
    fn profile_max_non_decreasing_in_radius((g, ord) in arb_ordered_graph(15)) {
        let maxima: Vec<usize> = (1..=4).map(|s| back_reach_profile(&g, &ord, s).unwrap().max).collect();
        prop_assert!(maxima.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn orderings_from_every_strategy_are_permutations(g in arb_graph(20), seed in any::<u64>()) {
        for strategy in cfcol::Strategy::all(seed) {
            let ord = strategy.build(&g);
            let mut seq = ord.seq().to_vec();
            seq.sort_unstable();
            prop_assert_eq!(seq, (0..g.n()).collect::<Vec<_>>());
        }
        let (ord, d) = degeneracy_order(&g);
        let expected = if g.n() == 0 { 0 } else { d + 1 };
        prop_assert_eq!(back_reach_profile(&g, &ord, 1).unwrap().max, expected);
    }
}
