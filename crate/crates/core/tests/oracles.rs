#![allow(clippy::int_plus_one)]

mod common;

use cfcol::colouring::DEFAULT_EXACT_LIMIT;
use cfcol::reach::DEFAULT_SCOL_LIMIT;
use cfcol::*;
use common::*;

fn kind(c: Criterion) -> Kind {
    match c {
        Criterion::Proper => Kind::Proper,
        Criterion::Odd => Kind::Odd,
        Criterion::ConflictFree => Kind::ConflictFree,
    }
}

#[test]
fn path_enumerator_reproduces_worked_examples() {
    let id = |n| VertexOrdering::identity(n);
    let one_based =
        |s: std::collections::BTreeSet<usize>| s.into_iter().map(|v| v + 1).collect::<Vec<_>>();
    assert_eq!(
        one_based(reach_by_paths(&path(4), &id(4), 3, 2)),
        vec![3, 4]
    );
    assert_eq!(
        one_based(reach_by_paths(&cycle(5), &id(5), 3, 2)),
        vec![1, 3, 4]
    );
    let star = generate(&GenSpec::Star { leaves: 3 }).unwrap();
    let ord = VertexOrdering::from_seq(vec![1, 2, 3, 0]).unwrap();
    assert_eq!(one_based(reach_by_paths(&star, &ord, 2, 2)), vec![2, 3]);
}

#[test]
fn exact_scol_matches_permutation_brute_force() {
    let graphs = all_labelled_graphs(4)
        .into_iter()
        .chain((0..12).map(|seed| {
            generate(&GenSpec::Gnp {
                n: 6,
                p: 0.45,
                seed,
            })
            .unwrap()
        }));
    for g in graphs {
        for s in 1..=3 {
            let (value, _) = exact_scol(&g, s, DEFAULT_SCOL_LIMIT).unwrap();
            assert_eq!(value, scol_by_permutations(&g, s), "{g:?} s={s}");
        }
    }
}

#[test]
fn exact_scol_spec_values_by_brute_force() {
    let star = generate(&GenSpec::Star { leaves: 3 }).unwrap();
    let k4 = generate(&GenSpec::Complete { n: 4 }).unwrap();
    assert_eq!(scol_by_permutations(&cycle(5), 2), 3);
    assert_eq!(scol_by_permutations(&star, 2), 2);
    assert_eq!(scol_by_permutations(&k4, 2), 4);
    assert_eq!(scol_by_permutations(&path(4), 1), 2);
}

#[test]
fn exact_chromatic_matches_enumeration() {
    let graphs = all_labelled_graphs(4)
        .into_iter()
        .chain((0..10).map(|seed| generate(&GenSpec::Gnp { n: 6, p: 0.5, seed }).unwrap()))
        .chain([cycle(5), path(4), path(3), cycle(6)]);
    for g in graphs {
        for c in Criterion::ALL {
            let (value, _) = exact_chromatic(&g, c, DEFAULT_EXACT_LIMIT).unwrap();
            assert_eq!(value, chromatic_by_enumeration(&g, kind(c)), "{g:?} {c}");
        }
    }
}

#[test]
fn validators_match_definitions() {
    for g in all_labelled_graphs(4) {
        for code in 0..81u32 {
            let colours: Vec<u32> = (0..4).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
            let col = Colouring::new(colours.clone(), 3).unwrap();
            for c in Criterion::ALL {
                let verdict = verify_colouring(&g, &col, c).unwrap();
                // The validators for odd/cf do not demand properness.
                let expected = match c {
                    Criterion::Proper => satisfies(&g, &colours, Kind::Proper),
                    _ => g.vertices().all(|v| {
                        let nbrs = g.neighbours(v);
                        nbrs.is_empty()
                            || nbrs.iter().any(|&w| {
                                let k = nbrs.iter().filter(|&&x| colours[x] == colours[w]).count();
                                if c == Criterion::Odd {
                                    k % 2 == 1
                                } else {
                                    k == 1
                                }
                            })
                    }),
                };
                assert_eq!(verdict.ok, expected);
                assert_eq!(verdict.ok, verdict.witness.is_none());
            }
        }
    }
}

#[test]
fn degeneracy_matches_subset_definition() {
    for g in all_labelled_graphs(5) {
        assert_eq!(degeneracy_order(&g).1, degeneracy_by_subsets(&g));
    }
}

#[test]
fn greedy_worked_examples_validate() {
    let g = path(4);
    let col = greedy_cf_colouring(&g, &VertexOrdering::identity(4));
    for k in [Kind::Proper, Kind::Odd, Kind::ConflictFree] {
        assert!(satisfies(&g, col.colours(), k));
    }
}

#[test]
fn grid_row_major_reach_bounded() {
    for (rows, cols) in [(2, 2), (3, 7), (6, 5), (10, 10)] {
        let g = generate(&GenSpec::Grid { rows, cols }).unwrap();
        let ord = VertexOrdering::identity(g.n());
        // R(v, 2) ⊆ {v, left, up, up-right}
        for v in g.vertices() {
            let (r, c) = (v / cols, v % cols);
            let mut allowed = vec![v];
            if c > 0 {
                allowed.push(v - 1);
            }
            if r > 0 {
                allowed.push(v - cols);
                if c + 1 < cols {
                    allowed.push(v - cols + 1);
                }
            }
            for w in reach_by_paths(&g, &ord, v, 2) {
                assert!(allowed.contains(&w));
            }
        }
        assert!(back_reach_profile(&g, &ord, 2).unwrap().max <= 4);
    }
}

/// Conflict-free chromatic numbers are not bounded in terms of scol₁. The
/// 1-subdivision of K_k is 2-degenerate while its χ_pcf grows; this only
/// records the observed values and checks them against the 2·scol₂ − 1 bound.
#[test]
fn scol1_gap_observation() {
    for k in 3..=4 {
        let n = k + k * (k - 1) / 2;
        let mut edges = Vec::new();
        let mut next = k + 1;
        for u in 1..=k {
            for v in u + 1..=k {
                edges.extend([(u, next), (next, v)]);
                next += 1;
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let cf = exact_chromatic(&g, Criterion::ConflictFree, n).unwrap().0 as usize;
        let scol1 = exact_scol(&g, 1, n).unwrap().0;
        let scol2 = exact_scol(&g, 2, n).unwrap().0;
        println!("subdivided K{k}: chi_pcf={cf} scol1={scol1} scol2={scol2}");
        assert_eq!(scol1, 3);
        assert!(cf <= 2 * scol2 - 1);
    }
}
