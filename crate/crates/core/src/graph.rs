//! Simple undirected graphs stored as sorted adjacency lists.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A finite, simple, undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending and symmetric. A `Graph` is immutable
/// once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from `1`-based edge pairs.
    ///
    /// Edge order is irrelevant. Out-of-range endpoints, self-loops and
    /// duplicate edges (including `(u, v)` followed by `(v, u)`) are rejected,
    /// naming the offending pair.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        let mut m = 0;
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u - 1].push(v - 1);
            adjacency[v - 1].push(u - 1);
            m += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, m })
    }

    /// Builds a graph from `0`-based edges produced by trusted code (generators).
    pub(crate) fn from_zero_based<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u + 1, v + 1)))
            .expect("generator produced an invalid edge")
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Returns the subgraph on the same vertex set keeping edges for which
    /// `keep` holds.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges: Vec<_> = self.edges().filter(|&(u, v)| keep(u, v)).collect();
        Graph::from_zero_based(self.n(), edges)
    }

    /// Checks the structural invariants. Used by tests over generated graphs.
    pub fn is_consistent(&self) -> bool {
        let n = self.n();
        let mut degree_sum = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            degree_sum += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if list
                .iter()
                .any(|&w| w >= n || w == v || !self.has_edge(w, v))
            {
                return false;
            }
        }
        degree_sum == 2 * self.m
    }
}
