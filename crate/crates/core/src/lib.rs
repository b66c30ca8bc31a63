//! Edge insertion in simple topological drawings.
//!
//! * [`geom`]: exact rational geometry and planarization of curve sets.
//! * [`drawing`]: half-edge maps, simple-drawing validation, colored duals.
//! * [`insertion`]: deciding whether an edge `uv` can be added to a simple
//!   drawing, with kernelization and witness enumeration.
//! * [`reduction`]: drawings built from 3CNF formulas whose insertion
//!   problem is equivalent to satisfiability.
//! * [`pseudocircles`]: extending a pseudosegment to a pseudocircle in an
//!   arrangement of pseudocircles.
//! * [`gen`] and [`render`]: seeded random instances and DOT/SVG output.

pub mod drawing;
pub mod gen;
pub mod geom;
pub mod insertion;
pub mod pseudocircles;
pub mod reduction;
pub mod render;
pub mod scalar;

pub use scalar::{int, rat, Rational, Scalar};

/// Point with exact rational coordinates.
pub type RationalPoint = geom::Point<Rational>;
/// Polyline with exact rational coordinates.
pub type RationalPolyline = geom::Polyline<Rational>;
/// Curve set with exact rational coordinates.
pub type RationalCurveSet = geom::CurveSet<Rational>;
/// Point with `f64` coordinates.
pub type FloatPoint = geom::Point<f64>;
