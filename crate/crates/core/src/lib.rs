//! Hermitian adjacency spectra of mixed graphs.
//!
//! A mixed graph has undirected edges and arcs. Its Hermitian adjacency matrix has entry `1`
//! for an undirected edge, `i` for an arc `u -> v` and `-i` for the reverse arc. This crate
//! computes exact characteristic polynomials and ranks of these matrices, decides four-way
//! switching equivalence, classifies the graphs of rank 2 and decides which of them are
//! determined by their spectrum.

pub mod error;
pub mod families;
pub mod gaussian;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod rank2dhs;
pub mod spectral;
pub mod structure;
pub mod switching;

pub use error::{Error, Result};
pub use families::{gen_family, Family};
pub use graph::{EdgeKind, MixedGraph};
