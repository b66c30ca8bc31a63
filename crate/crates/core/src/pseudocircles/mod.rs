//! Extending a pseudosegment σ to a pseudocircle inside an arrangement of
//! pseudocircles.
//!
//! The decision grows a region of faces that no extension σ′ can enter:
//! first the disks of circles σ crosses twice, then, one circle at a time,
//! every cell of "circle plus region boundary" that σ′ could not use without
//! crossing that circle too often. If `v` stays on the boundary until
//! nothing more can be cut off, a route hugging the boundary is a valid
//! extension; [`extend`] returns it as a certificate.
//!
//! Everything is combinatorial on the planarization of circles plus σ.
//! σ belongs to the region from the start, which is modelled by never
//! crossing its edges.

mod arrangement;
mod extend;
pub mod instances;
mod region;

pub use arrangement::{
    Arrangement, ArrangementJson, JsonCircle, JsonSigma, SigmaPath, SIGMA_ID,
};
pub use extend::{
    extend, extend_traced, oracle_extend, verify_certificate, CertCrossing, ExtendOutcome,
    ExtendTrace, ExtensionCertificate, Obstruction, Side,
};
pub use region::{
    check_region, classify, grow, initial_region, CircleClassification, GrowStep, InitialRegion,
    Region, ScanOrder,
};

use crate::geom::GeomError;
use thiserror::Error;

/// Default node budget for [`oracle_extend`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudocircleError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("circle {0:?} is not a closed curve")]
    NotClosed(String),
    #[error("circles {0:?} and {1:?} cross {2} times")]
    PairCrossings(String, String, usize),
    #[error("sigma crosses {0:?} {1} times")]
    TooManyCrossings(String, usize),
    #[error("inconsistent sides at {0:?}")]
    InconsistentSides(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("search budget of {0} nodes exhausted")]
    Timeout(u64),
}
