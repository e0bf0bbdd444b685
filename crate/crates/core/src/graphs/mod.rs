//! Multigraphs with external legs, ribbon graphs, and the structural
//! enumerations the polynomials are built from.

mod canonical;
mod graph;
pub mod json;
mod ribbon;
mod subset;

pub use canonical::{GraphLabel, RibbonLabel};
pub use graph::{natural_cmp, Edge, EdgeKind, Graph, GraphBuilder, Leg, LegDir, TwoTree};
pub use ribbon::{Dart, Face, RibbonGraph, TwoQuasiTree};
pub use subset::{EdgeSubset, MAX_ENUM_EDGES};

