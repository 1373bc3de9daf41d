//! Conflict-free and odd graph colouring driven by strong colouring number
//! orderings.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] holds the simple undirected [`Graph`] and its builder.
//! - [`io`] reads and writes graphs, orderings and colourings.
//! - [`gen`] provides deterministic generators for test corpora.
//! - [`ordering`] and [`reach`] cover vertex orderings, reach sets
//!   `R(G, ⪯, v, s)`, back-reach profiles and exact strong colouring numbers.
//! - [`colouring`] has the left-to-right conflict-free colouring, validators
//!   and exact chromatic oracles.
//! - [`bench`] runs corpora and emits CSV.
//!
//! Vertices are `0`-based `usize` indices inside the library. Every file
//! format and every user-facing message uses `1`-based ids.

pub mod bench;
pub mod colouring;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod ordering;
pub mod reach;

pub use colouring::{
    exact_chromatic, greedy_cf_colouring, verify_colouring, Colouring, Criterion, Verdict,
};
pub use error::{Error, Result};
pub use gen::{generate, GenSpec};
pub use graph::Graph;
pub use ordering::{Strategy, VertexOrdering};
pub use reach::{
    back_reach_profile, degeneracy_order, exact_scol, min_backreach_order, reach_set, ReachProfile,
};
