//! Vertex colourings: the left-to-right conflict-free colouring, validators
//! for proper / odd / conflict-free colourings, and exact chromatic oracles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::VertexOrdering;
use crate::reach::{back_reach_profile, ReachBfs};

/// A map from vertices to colours `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<u32>,
    palette: u32,
}

impl Colouring {
    /// Checks `1 <= colours[v] <= palette` for every vertex.
    pub fn new(colours: Vec<u32>, palette: u32) -> Result<Self> {
        if let Some(v) = colours.iter().position(|&c| c == 0 || c > palette) {
            return Err(Error::InvalidColouring(format!(
                "vertex {} has colour {} outside 1..={palette}",
                v + 1,
                colours[v]
            )));
        }
        Ok(Colouring { colours, palette })
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of colours made available.
    pub fn palette(&self) -> u32 {
        self.palette
    }

    /// Number of distinct colours actually assigned.
    pub fn used(&self) -> u32 {
        let mut seen = vec![false; self.palette as usize + 1];
        let mut used = 0;
        for &c in &self.colours {
            if !std::mem::replace(&mut seen[c as usize], true) {
                used += 1;
            }
        }
        used
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Proper,
    Odd,
    ConflictFree,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [Criterion::Proper, Criterion::Odd, Criterion::ConflictFree];
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Proper => "proper",
            Criterion::Odd => "odd",
            Criterion::ConflictFree => "conflict_free",
        })
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(Criterion::Proper),
            "odd" => Ok(Criterion::Odd),
            "conflict_free" | "cf" => Ok(Criterion::ConflictFree),
            _ => Err(Error::Usage(format!(
                "unknown criterion '{s}' (expected proper, odd or conflict_free)"
            ))),
        }
    }
}

/// Outcome of a validator. `witness` is a violating vertex when `!ok`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub witness: Option<usize>,
    pub detail: String,
}

impl Verdict {
    fn pass(criterion: Criterion) -> Self {
        Verdict {
            ok: true,
            witness: None,
            detail: format!("colouring is {criterion}"),
        }
    }

    fn fail(v: usize, detail: String) -> Self {
        Verdict {
            ok: false,
            witness: Some(v),
            detail,
        }
    }
}

/// Colours vertices left to right along `ord`.
///
/// The vertex `v` at position `i > 0` avoids two sets of colours:
///
/// - `X`: colours of `R(G, ⪯, v, 2) \ {v}`,
/// - `Y`: colours of `π(u)` for each left neighbour `u` of `v` with
///   `π(u) != v`, where `π(u)` is the neighbour of `u` at the smallest position.
///
/// and takes the smallest remaining colour. Both sets have at most `r - 1`
/// elements where `r` is the ordering's radius-2 back-reach, so the palette is
/// `2r - 1`. The result is proper and conflict-free on every vertex with a
/// neighbour.
///
/// Panics if a vertex would need a colour beyond the palette, which the
/// counting argument rules out.
pub fn greedy_cf_colouring(g: &Graph, ord: &VertexOrdering) -> Colouring {
    let n = g.n();
    assert_eq!(ord.len(), n, "ordering does not match graph size");
    if n == 0 {
        return Colouring {
            colours: Vec::new(),
            palette: 0,
        };
    }
    let r2 = back_reach_profile(g, ord, 2)
        .expect("radius 2 is valid")
        .max;
    let palette = (2 * r2 as u32).saturating_sub(1).max(1);

    let leftmost: Vec<Option<usize>> = g
        .vertices()
        .map(|v| g.neighbours(v).iter().copied().min_by_key(|&w| ord.pos(w)))
        .collect();

    let mut colours = vec![0u32; n];
    // blocked[c] == stamp marks colour c as unavailable for the current vertex
    let mut blocked = vec![0usize; palette as usize + 2];
    let mut bfs = ReachBfs::new(n);
    for (i, &v) in ord.seq().iter().enumerate() {
        let stamp = i + 1;
        bfs.under(g, ord, v, 2, |w| {
            if w != v {
                blocked[colours[w] as usize] = stamp;
            }
        });
        for &u in g.neighbours(v) {
            if ord.precedes(u, v) {
                let p = leftmost[u].expect("u has neighbour v");
                if p != v {
                    blocked[colours[p] as usize] = stamp;
                }
            }
        }
        let colour = (1..blocked.len()).find(|&c| blocked[c] != stamp).unwrap();
        assert!(
            colour as u32 <= palette,
            "vertex {} needs colour {colour} beyond palette {palette}",
            v + 1
        );
        colours[v] = colour as u32;
    }
    Colouring { colours, palette }
}

/// Checks `col` against `criterion`. Vertices without neighbours are exempt
/// from the odd and conflict-free conditions.
pub fn verify_colouring(g: &Graph, col: &Colouring, criterion: Criterion) -> Result<Verdict> {
    if col.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: col.len(),
        });
    }
    let c = col.colours();
    if criterion == Criterion::Proper {
        return Ok(match g.edges().find(|&(u, v)| c[u] == c[v]) {
            Some((u, v)) => Verdict::fail(
                u,
                format!(
                    "edge ({}, {}) is monochromatic with colour {}",
                    u + 1,
                    v + 1,
                    c[u]
                ),
            ),
            None => Verdict::pass(criterion),
        });
    }
    let mut counts = vec![0u32; col.palette() as usize + 1];
    for v in g.vertices() {
        let nbrs = g.neighbours(v);
        if nbrs.is_empty() {
            continue;
        }
        for &w in nbrs {
            counts[c[w] as usize] += 1;
        }
        let satisfied = nbrs.iter().any(|&w| {
            let k = counts[c[w] as usize];
            match criterion {
                Criterion::Odd => k % 2 == 1,
                _ => k == 1,
            }
        });
        for &w in nbrs {
            counts[c[w] as usize] = 0;
        }
        if !satisfied {
            let want = if criterion == Criterion::Odd {
                "an odd number of times"
            } else {
                "exactly once"
            };
            return Ok(Verdict::fail(
                v,
                format!(
                    "no colour appears {want} in the neighbourhood of vertex {}",
                    v + 1
                ),
            ));
        }
    }
    Ok(Verdict::pass(criterion))
}

/// Default vertex limit for [`exact_chromatic`].
pub const DEFAULT_EXACT_LIMIT: usize = 8;

/// Smallest `c` admitting a proper colouring with at most `c` colours that
/// also satisfies `variant`, with a witness.
///
/// Backtracking over vertices in id order, rejecting monochromatic edges as
/// soon as they appear. A vertex may open at most one colour beyond those
/// already in use, which removes palette permutations. The odd and
/// conflict-free conditions are checked at complete assignments.
pub fn exact_chromatic(g: &Graph, variant: Criterion, limit: usize) -> Result<(u32, Colouring)> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok((
            0,
            Colouring {
                colours: Vec::new(),
                palette: 0,
            },
        ));
    }
    for c in 1..=n as u32 {
        let mut search = Search {
            g,
            variant,
            palette: c,
            colours: vec![0; n],
        };
        if search.extend(0, 0) {
            let witness = Colouring {
                colours: search.colours,
                palette: c,
            };
            return Ok((c, witness));
        }
    }
    unreachable!("n distinct colours are proper and conflict-free")
}

struct Search<'a> {
    g: &'a Graph,
    variant: Criterion,
    palette: u32,
    colours: Vec<u32>,
}

impl Search<'_> {
    fn extend(&mut self, v: usize, opened: u32) -> bool {
        if v == self.g.n() {
            let col = Colouring {
                colours: self.colours.clone(),
                palette: self.palette,
            };
            return verify_colouring(self.g, &col, self.variant)
                .expect("sizes match")
                .ok;
        }
        let top = (opened + 1).min(self.palette);
        for c in 1..=top {
            let clash = self
                .g
                .neighbours(v)
                .iter()
                .any(|&w| w < v && self.colours[w] == c);
            if clash {
                continue;
            }
            self.colours[v] = c;
            if self.extend(v + 1, opened.max(c)) {
                return true;
            }
        }
        self.colours[v] = 0;
        false
    }
}
