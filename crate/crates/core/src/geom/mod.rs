//! Exact planar geometry: points, segments, polylines, and planarization of
//! curve sets.

mod curveset;
mod planarize;
mod point;
mod polyline;
mod segment;

pub use curveset::{Curve, CurveSet};
pub use planarize::{build_planarization, Simplicity};
pub(crate) use planarize::winding;
pub use point::{angle_cmp, cross, dot, orient, Orientation, Point};
pub use polyline::Polyline;
pub use segment::{segment_intersection, Intersection, Segment};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("invalid polyline: {0}")]
    InvalidPolyline(String),
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("degenerate contact between {0:?} and {1:?}")]
    DegenerateContact(String, String),
    #[error("three or more curves meet at {0}")]
    TripleIncidence(String),
    #[error("curves {0:?} and {1:?} share more than one point")]
    PairCrossingBound(String, String),
}
