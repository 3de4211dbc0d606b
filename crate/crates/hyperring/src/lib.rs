//! Exact combinatorial search over 3-uniform hypergraphs: ring families and
//! their blow-ups, constructive Fano-plane location under co-degree bounds,
//! the named extremal constructions with their densities, and brute-force
//! Turán oracles at toy sizes.
//!
//! Organization:
//!
//! - [`graph`]: bitset-backed 3-graphs, degrees and co-degrees, blow-ups,
//!   induced subgraphs; [`embed`]: subgraph-embedding search.
//! - [`constructions`]: generators for every named family.
//! - [`ringsearch`]: the pair digraph, shortest directed cycles, and the
//!   blow-up variant over pairs of pairs.
//! - [`fanofinder`]: the ring-to-Fano pipeline with staged failure.
//! - [`extremal`]: property checkers and exhaustive extremal searches.
//! - [`density`]: closed forms, optimization, convergence sweeps.
//! - [`verify`]: the claim battery; [`oracle`]: brute-force references the
//!   fast paths are checked against.

pub mod bits;
pub mod constructions;
pub mod density;
pub mod embed;
pub mod error;
pub mod extremal;
pub mod fanofinder;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod ringsearch;
pub mod verify;

pub use embed::find_embedding;
pub use error::{Error, Result};
pub use graph::{Embedding, KGraph, TripleGraph};
