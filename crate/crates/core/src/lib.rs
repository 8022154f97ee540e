//! Star digraphs, their relatives, and worst-case efficient domination.
//!
//! The crate builds the permutation-word families (star graphs and
//! digraphs, pancake and binary-star digraphs, oriented ternary cubes),
//! checks the domination predicates with self-contained certificates, and
//! verifies the chain structure that links consecutive star digraphs.

pub mod budget;
pub mod chains;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod families;
pub mod hamilton;
pub mod perm;
pub mod report;
pub mod setfile;

pub use budget::{Budget, Deadline};
pub use digraph::{OrientedGraph, VertexId, VertexLabel, VertexSet};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec, TernaryOrientation};
pub use perm::{GenIndex, Parity, PermWord};
pub use report::{ReportEnvelope, Status};
