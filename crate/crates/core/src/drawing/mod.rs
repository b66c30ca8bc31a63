//! Combinatorial drawings: half-edge maps, simple-drawing validation, faces,
//! and the colored dual used by the insertion search.

mod dual;
pub mod json;
mod map;
mod validate;

pub use dual::{colored_dual, verify_witness, ColoredDual, DualArc, Step, Witness};
pub use map::{
    Color, ColorId, ColorKind, EdgeId, Face, FaceId, FaceKeys, Geometry, HalfEdge, HalfEdgeId,
    Planarization, Vertex, VertexId, VertexKind,
};
pub use validate::{check_structure, validate_simple, ValidationReport, Violation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("unknown or non-original vertex {0:?}")]
    UnknownVertex(String),
    #[error("combinatorial input must be connected")]
    Disconnected,
    #[error("geometry: {0}")]
    Geometry(String),
}

/// Faces of the planarization, ordered by id.
pub fn faces(p: &Planarization) -> &[Face] {
    p.faces()
}

/// Looks a vertex up by name, falling back to a numeric id.
pub fn resolve_vertex(p: &Planarization, key: &str) -> Result<VertexId, DrawingError> {
    if let Some(v) = p.vertex_by_name(key) {
        return Ok(v);
    }
    match key.parse::<usize>() {
        Ok(v) if v < p.vertices().len() => Ok(v),
        _ => Err(DrawingError::UnknownVertex(key.to_string())),
    }
}
