//! Residual matching numbers of graphs.
//!
//! For a graph `G`, `ell(G)` and `L(G)` are the minimum and maximum of
//! `nu(G \ F)` over all maximum matchings `F` of `G`. This crate computes
//! them exactly on small graphs, supplies the polynomial subroutines around
//! them (general and bipartite maximum matching, bipartite `nu_2` via max
//! flow), and compiles exact-3SAT formulas into the two lattice graph
//! families whose residual matching numbers track the number of satisfied
//! clauses, with certificates for every count involved.

pub mod cli;
pub mod color;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod format;
pub mod graph;
pub mod matching;
pub mod rational;
pub mod reduction;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, Vertex};
pub use matching::{max_matching, max_matching_bipartite, nu, validate_matching, Matching, MatchingFlags};
pub use spectrum::{spectrum, SpectrumReport};
