//! Spectral conditions for matching extendability and regular factors:
//! graph construction and I/O, adjacency spectra and equitable quotients,
//! exact matching and factor checkers with certificates, the extremal graph
//! families, and an experiment harness.

pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod matchfactor;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Graph, Side, Vertex, VertexSet};
