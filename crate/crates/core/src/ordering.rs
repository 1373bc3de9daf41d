//! Total orders on the vertex set and the named strategies that build them.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reach::{degeneracy_order, min_backreach_order};

/// A permutation of `0..n`. `seq[i]` is the vertex at position `i` and
/// `pos` is the inverse map, so `u ⪯ v` iff `pos(u) <= pos(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// Builds an ordering from its position sequence, checking that it is a
    /// permutation of `0..seq.len()`.
    pub fn from_seq(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {} out of range 1..={n}",
                    v + 1
                )));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {} appears twice",
                    v + 1
                )));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// A uniformly random ordering drawn from `ChaCha8Rng::seed_from_u64(seed)`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::from_seq(seq).expect("shuffle is a permutation")
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        Self::from_seq(seq).expect("reversal is a permutation")
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    #[inline]
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertex at position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.seq[i]
    }

    /// `u ≺ v`.
    #[inline]
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.pos[u] < self.pos[v]
    }
}

/// Named ordering strategies shared by the corpus runner and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Identity,
    Reverse,
    Random(u64),
    Degeneracy,
    MinBackreach,
}

impl Strategy {
    pub fn build(&self, g: &Graph) -> VertexOrdering {
        match *self {
            Strategy::Identity => VertexOrdering::identity(g.n()),
            Strategy::Reverse => VertexOrdering::identity(g.n()).reversed(),
            Strategy::Random(seed) => VertexOrdering::random(g.n(), seed),
            Strategy::Degeneracy => degeneracy_order(g).0,
            Strategy::MinBackreach => min_backreach_order(g),
        }
    }

    /// The five strategies with `random` fixed to `seed`.
    pub fn all(seed: u64) -> [Strategy; 5] {
        [
            Strategy::Identity,
            Strategy::Reverse,
            Strategy::Random(seed),
            Strategy::Degeneracy,
            Strategy::MinBackreach,
        ]
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Identity => f.write_str("identity"),
            Strategy::Reverse => f.write_str("reverse"),
            Strategy::Random(seed) => write!(f, "random:{seed}"),
            Strategy::Degeneracy => f.write_str("degeneracy"),
            Strategy::MinBackreach => f.write_str("min_backreach"),
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    /// Accepts `identity`, `reverse`, `degeneracy`, `min_backreach`,
    /// `random` (seed 0), `random:SEED` and `random(SEED)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Usage(format!("unknown strategy '{s}'"));
        Ok(match s {
            "identity" => Strategy::Identity,
            "reverse" => Strategy::Reverse,
            "degeneracy" => Strategy::Degeneracy,
            "min_backreach" => Strategy::MinBackreach,
            "random" => Strategy::Random(0),
            _ => {
                let seed = s
                    .strip_prefix("random:")
                    .or_else(|| s.strip_prefix("random(").and_then(|r| r.strip_suffix(')')))
                    .ok_or_else(bad)?;
                Strategy::Random(seed.trim().parse().map_err(|_| bad())?)
            }
        })
    }
}
