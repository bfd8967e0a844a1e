//! Decomposition engine for dense quasirandom graphs.
//!
//! Implements optimal decompositions into cycles plus a matching, paths, and
//! linear forests, along with minimum edge colourings of even-order
//! quasirandom graphs. Every decomposition is certified by an independent
//! verifier; brute-force oracles cover desk-scale inputs.

pub mod error;
pub mod graph;
pub mod params;
pub mod gnp;
pub mod matching;
pub mod flow;
pub mod euler;
pub mod hamilton;
pub mod exact;
pub mod factor;
pub mod orient;
pub mod cycles;

pub use error::{Error, Result};
pub use graph::{canon, DegreeProfile, Digraph, Edge, Graph, Multigraph, PairList};
pub use params::{OrientationConfig, QuasirandomParams};
