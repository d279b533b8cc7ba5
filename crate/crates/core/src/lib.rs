//! Character co-occurrence network analysis.
//!
//! This crate reconstructs an analysis pipeline for networks built from
//! two-character compound word lists: each character is a node and each
//! word links its upper character to its lower character. On top of that it
//! provides:
//!
//! * [`corpus`] — parsing of word lists and character whitelists.
//! * [`graph`] — the raw directed multigraph, simplification to an
//!   undirected simple graph, connected components, induced subgraphs,
//!   and file formats.
//! * [`metrics`] — average degree, exact mean path length and diameter,
//!   Watts–Strogatz clustering, random-graph clustering baselines, degree
//!   distributions, and power-law fits.
//! * [`generators`] — uniform G(n, m) samples and fitness-model networks
//!   used as synthetic scale-free hosts.
//! * [`invasion`] — degree-biased invasion growth on a host graph, ensemble
//!   statistics, and calibration of the bias exponent α against a target
//!   average degree.
//!
//! Everything randomized takes an explicit `u64` seed and is bit-exactly
//! reproducible; see [`seed`] for how sub-seeds are derived.

pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invasion;
pub mod metrics;
pub mod seed;

mod parallel;

pub use error::{Error, Result};
