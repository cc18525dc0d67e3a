//! Edge colourings, rainbow paths and rainbow k-connectivity certificates.

use thiserror::Error;

use crate::graph::Vertex;

mod colouring;
mod verify;

pub use colouring::{Colour, ColouringJson, EdgeColouring};
pub use verify::{
    find_disjoint_rainbow_paths, is_rainbow_path, verify_rainbow_k_connected, verify_rainbow_k_connected_par,
    RainbowCertificate, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("colouring has {colours} entries but the graph has {edges} edges")]
    LengthMismatch { edges: usize, colours: usize },
    #[error("edge {{{u},{v}}} has colour {colour}, outside 1..={colour_count}")]
    ColourOutOfRange {
        u: Vertex,
        v: Vertex,
        colour: Colour,
        colour_count: Colour,
    },
    #[error("edge {{{0},{1}}} is not coloured")]
    MissingEdge(Vertex, Vertex),
    #[error("{{{0},{1}}} is not an edge of the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("edge {{{0},{1}}} is coloured twice")]
    DuplicateEntry(Vertex, Vertex),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("endpoints must differ (got {0} twice)")]
    SameEndpoints(Vertex),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("parse error: {0}")]
    Parse(String),
}
