//! Rainbow k-connectivity of small graphs: exact verification, exact rc_k
//! by colouring search, the extremal constructions, and t_k / s_k tables by
//! exhaustive enumeration.

pub mod cli;
pub mod constructions;
pub mod extremal;
pub mod graph;
pub mod rainbow;
pub mod solver;

pub use graph::{Graph, GraphError, Vertex};
