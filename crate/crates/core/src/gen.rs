//! Deterministic graph generators.
//!
//! Randomised families draw from `ChaCha8Rng::seed_from_u64(seed)`, so a
//! `(family, params, seed)` triple always yields the same graph.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A generator family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenSpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Centre is vertex 1, leaves are 2..=leaves+1.
    Star {
        leaves: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// `rows × cols` grid, row-major numbering.
    Grid {
        rows: usize,
        cols: usize,
    },
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Stacked triangulation: repeatedly insert a vertex into a uniformly
    /// chosen triangular face.
    Planar3Tree {
        n: usize,
        seed: u64,
    },
}

pub const FAMILIES: [&str; 8] = [
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "grid",
    "gnp",
    "planar3tree",
];

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Path { .. } => "path",
            GenSpec::Cycle { .. } => "cycle",
            GenSpec::Complete { .. } => "complete",
            GenSpec::Star { .. } => "star",
            GenSpec::CompleteBipartite { .. } => "complete_bipartite",
            GenSpec::Grid { .. } => "grid",
            GenSpec::Gnp { .. } => "gnp",
            GenSpec::Planar3Tree { .. } => "planar3tree",
        }
    }

    /// Parses a family name and comma-separated parameters, e.g.
    /// `("grid", "3,4", None)` or `("gnp", "8,0.5", Some(7))`. A missing seed
    /// defaults to 0; deterministic families ignore it.
    pub fn parse(family: &str, params: &str, seed: Option<u64>) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidParams {
            family: family.to_string(),
            msg,
        };
        let fields: Vec<&str> = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let want = |k: usize| {
            if fields.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "expected {k} parameter(s), got {}",
                    fields.len()
                )))
            }
        };
        let int = |i: usize| {
            fields[i]
                .parse::<usize>()
                .map_err(|_| invalid(format!("'{}' is not a non-negative integer", fields[i])))
        };
        let seed = seed.unwrap_or(0);
        let spec = match family {
            "path" => want(1).and_then(|_| Ok(GenSpec::Path { n: int(0)? }))?,
            "cycle" => want(1).and_then(|_| Ok(GenSpec::Cycle { n: int(0)? }))?,
            "complete" => want(1).and_then(|_| Ok(GenSpec::Complete { n: int(0)? }))?,
            "star" => want(1).and_then(|_| Ok(GenSpec::Star { leaves: int(0)? }))?,
            "complete_bipartite" => {
                want(2)?;
                GenSpec::CompleteBipartite {
                    a: int(0)?,
                    b: int(1)?,
                }
            }
            "grid" => {
                want(2)?;
                GenSpec::Grid {
                    rows: int(0)?,
                    cols: int(1)?,
                }
            }
            "gnp" => {
                want(2)?;
                let p = fields[1]
                    .parse::<f64>()
                    .map_err(|_| invalid(format!("'{}' is not a probability", fields[1])))?;
                GenSpec::Gnp {
                    n: int(0)?,
                    p,
                    seed,
                }
            }
            "planar3tree" => want(1).and_then(|_| Ok(GenSpec::Planar3Tree { n: int(0)?, seed }))?,
            _ => {
                return Err(invalid(format!(
                    "unknown family (expected one of {})",
                    FAMILIES.join(", ")
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::InvalidParams {
                family: self.family().to_string(),
                msg: msg.to_string(),
            })
        };
        match *self {
            GenSpec::Path { n } | GenSpec::Complete { n } if n < 1 => fail("requires n >= 1"),
            GenSpec::Cycle { n } if n < 3 => fail("requires n >= 3"),
            GenSpec::CompleteBipartite { a, b } if a + b < 1 => fail("requires a + b >= 1"),
            GenSpec::Grid { rows, cols } if rows < 1 || cols < 1 => {
                fail("requires rows, cols >= 1")
            }
            GenSpec::Gnp { n, .. } if n < 1 => fail("requires n >= 1"),
            GenSpec::Gnp { p, .. } if !(0.0..=1.0).contains(&p) => fail("requires 0 <= p <= 1"),
            GenSpec::Planar3Tree { n, .. } if n < 3 => fail("requires n >= 3"),
            _ => Ok(()),
        }
    }

    /// Comma-separated parameters in the form accepted by [`GenSpec::parse`].
    pub fn params(&self) -> String {
        match *self {
            GenSpec::Path { n } | GenSpec::Cycle { n } | GenSpec::Complete { n } => n.to_string(),
            GenSpec::Star { leaves } => leaves.to_string(),
            GenSpec::CompleteBipartite { a, b } => format!("{a},{b}"),
            GenSpec::Grid { rows, cols } => format!("{rows},{cols}"),
            GenSpec::Gnp { n, p, .. } => format!("{n},{p}"),
            GenSpec::Planar3Tree { n, .. } => n.to_string(),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            GenSpec::Gnp { seed, .. } | GenSpec::Planar3Tree { seed, .. } => Some(seed),
            _ => None,
        }
    }
}

impl fmt::Display for GenSpec {
    /// `family(params)`, with `#seed` appended for randomised families.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family(), self.params())?;
        if let Some(seed) = self.seed() {
            write!(f, "#{seed}")?;
        }
        Ok(())
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        GenSpec::Path { n } => Graph::from_zero_based(n, (1..n).map(|i| (i - 1, i))),
        GenSpec::Cycle { n } => Graph::from_zero_based(n, (0..n).map(|i| (i, (i + 1) % n))),
        GenSpec::Complete { n } => {
            Graph::from_zero_based(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GenSpec::Star { leaves } => {
            Graph::from_zero_based(leaves + 1, (1..=leaves).map(|l| (0, l)))
        }
        GenSpec::CompleteBipartite { a, b } => {
            Graph::from_zero_based(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        GenSpec::Grid { rows, cols } => {
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::from_zero_based(rows * cols, edges)
        }
        GenSpec::Gnp { n, p, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_zero_based(n, edges)
        }
        GenSpec::Planar3Tree { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = vec![(0, 1), (1, 2), (0, 2)];
            // The initial triangle bounds two faces: inside and outside.
            let mut faces = vec![[0, 1, 2], [0, 1, 2]];
            for v in 3..n {
                let i = rng.gen_range(0..faces.len());
                let [a, b, c] = faces[i];
                edges.extend([(a, v), (b, v), (c, v)]);
                faces[i] = [a, b, v];
                faces.push([b, c, v]);
                faces.push([a, c, v]);
            }
            Graph::from_zero_based(n, edges)
        }
    };
    Ok(g)
}
