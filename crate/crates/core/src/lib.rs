//! Gallai graphs `H_n`, vertex replication, exact chromatic and fractional
//! chromatic computation, and the sign-sequence and stroll machinery that
//! decides 4-colourability of replications of `H_n`.

pub mod cache;
pub mod chromatic;
pub mod cover;
pub mod error;
pub mod fractional;
pub mod gallai;
pub mod graph;
pub mod rational;
pub mod replication;
pub mod scan;
pub mod signseq;
pub mod strolls;
pub mod theorem;
pub mod z3;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
