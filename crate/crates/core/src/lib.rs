//! Radio labelings of block graphs.
//!
//! The crate computes the lower bound `LB(G)` on the radio number of a block
//! graph, checks ordering certificates that prove the bound is attained,
//! builds optimal orderings for level-wise regular block graphs and extended
//! stars of blocks, relates trees to their line graphs, and provides an exact
//! brute-force radio number for small instances.

pub mod acceptance;
pub mod center;
pub mod certificate;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod line_graph;
pub mod radio;

pub use center::{BlockGraph, CenterInfo, GeoParams, LevelStructure};
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, DistanceMatrix, Graph};
pub use radio::{RadioLabeling, Validity, VertexOrdering};
