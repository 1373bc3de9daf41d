//! Brute-force oracles shared by the integration suites. None of these call
//! into the routines they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cfcol::{Graph, VertexOrdering};

/// Every labelled graph on `n` vertices, one per subset of the `n choose 2`
/// possible edges.
pub fn all_labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Reach set by enumerating every simple path of length at most `s` from `v`
/// and filtering on the endpoint and internal-vertex conditions.
pub fn reach_by_paths(g: &Graph, ord: &VertexOrdering, v: usize, s: usize) -> BTreeSet<usize> {
    fn walk(
        g: &Graph,
        ord: &VertexOrdering,
        root: usize,
        path: &mut Vec<usize>,
        s: usize,
        out: &mut BTreeSet<usize>,
    ) {
        let end = *path.last().unwrap();
        let internal = if path.len() > 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        let internal_ok = internal.iter().all(|&u| ord.pos(u) > ord.pos(root));
        if internal_ok && ord.pos(end) <= ord.pos(root) {
            out.insert(end);
        }
        if path.len() - 1 == s {
            return;
        }
        for &w in g.neighbours(end) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, ord, root, path, s, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(g, ord, v, &mut vec![v], s, &mut out);
    out
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `scol_s` as the minimum over all `n!` orderings of the path-enumeration
/// back-reach.
pub fn scol_by_permutations(g: &Graph, s: usize) -> usize {
    if g.n() == 0 {
        return 0;
    }
    permutations(g.n())
        .into_iter()
        .map(|seq| {
            let ord = VertexOrdering::from_seq(seq).unwrap();
            g.vertices()
                .map(|v| reach_by_paths(g, &ord, v, s).len())
                .max()
                .unwrap()
        })
        .min()
        .unwrap()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Proper,
    Odd,
    ConflictFree,
}

/// Direct definition check on a colour vector.
pub fn satisfies(g: &Graph, colours: &[u32], kind: Kind) -> bool {
    let proper = g.edges().all(|(u, v)| colours[u] != colours[v]);
    proper
        && g.vertices().all(|v| {
            let nbrs = g.neighbours(v);
            kind == Kind::Proper
                || nbrs.is_empty()
                || nbrs.iter().any(|&w| {
                    let k = nbrs.iter().filter(|&&x| colours[x] == colours[w]).count();
                    match kind {
                        Kind::Odd => k % 2 == 1,
                        _ => k == 1,
                    }
                })
        })
}

/// Smallest `c` such that some map `V -> 1..=c` is proper and satisfies
/// `kind`, by plain enumeration of all `c^n` maps.
pub fn chromatic_by_enumeration(g: &Graph, kind: Kind) -> u32 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for c in 1..=n as u32 {
        let total = (c as u64).pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let colours: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (x % c as u64) as u32 + 1;
                    x /= c as u64;
                    d
                })
                .collect();
            if satisfies(g, &colours, kind) {
                return c;
            }
        }
    }
    unreachable!()
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
pub fn degeneracy_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    (1u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| {
                    g.neighbours(v)
                        .iter()
                        .filter(|&&w| mask >> w & 1 == 1)
                        .count()
                })
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
}
