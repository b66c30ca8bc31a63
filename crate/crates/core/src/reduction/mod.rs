//! Drawings built from 3CNF formulas in which an edge `uv` can be inserted
//! exactly when the formula is satisfiable.
//!
//! The formula is first normalized so that every clause has one of four
//! sign patterns ([`transform_formula`]). The drawing is the snail (a six-arc
//! drawing in which cell X cannot reach cell Y), a family of frame arcs
//! that any `u`–`v` curve must cross early, one variable gadget per
//! variable and one clause gadget per clause ([`build_instance`]).

mod cnf;
pub(crate) mod geometry;
mod layout;
mod snail;
mod standalone;

pub use cnf::{
    brute_force_sat, brute_force_sat_transformed, transform_clause, transform_formula, ClauseType,
    CnfFormula, Literal, Slot, TransformedClause, TransformedFormula, MAX_BRUTE_FORCE_VARS,
};
pub use layout::{
    f_frame, roles, BoxRegion, ClauseGadget, FrameInfo, LineAnchor, LiteralEdge, Regions, Role,
    VariableGadget, KAPPA_F_X, MAX_COORDINATE,
};
pub use snail::{
    b2_star_edges, build_snail, tag_cells, SnailCell, SnailFrame, SnailTemplate, SNAIL_ARCS,
};
pub use standalone::{clause_gadget, variable_gadget, Standalone};

use crate::drawing::json::GeometricJson;
use crate::geom::CurveSet;
use crate::Rational;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("literal {0} out of range for {1} variables")]
    BadLiteral(i64, usize),
    #[error("DIMACS: {0}")]
    Dimacs(String),
    #[error("{0} variables exceed the brute-force limit of {MAX_BRUTE_FORCE_VARS}")]
    TooManyVariables(usize),
    #[error("layout needs coordinates up to {0}, above {MAX_COORDINATE}")]
    LayoutOverflow(i64),
}

/// A drawing produced from a formula, with the gadget bookkeeping.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub formula: TransformedFormula,
    pub drawing: CurveSet<Rational>,
    /// Names of the two isolated vertices.
    pub u: String,
    pub v: String,
    pub literal_map: Vec<LiteralEdge>,
    pub frame: FrameInfo,
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
    pub regions: Regions,
    /// Size of the snail's B2 cell in this instance.
    pub snail: SnailFrame,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GadgetJson<'a> {
    Variable(&'a VariableGadget),
    Clause(&'a ClauseGadget),
}

#[derive(Serialize)]
struct Sidecar<'a> {
    u: &'a str,
    v: &'a str,
    literal_map: &'a [LiteralEdge],
    frame: &'a FrameInfo,
    gadgets: Vec<GadgetJson<'a>>,
    regions: &'a Regions,
    transformed: &'a TransformedFormula,
}

impl ReductionInstance {
    /// The drawing in the geometric JSON format.
    pub fn drawing_json(&self) -> GeometricJson {
        GeometricJson::from_curve_set(&self.drawing)
    }

    /// Gadget bookkeeping as JSON.
    pub fn sidecar_json(&self) -> serde_json::Value {
        let gadgets = self
            .variables
            .iter()
            .map(GadgetJson::Variable)
            .chain(self.clauses.iter().map(GadgetJson::Clause))
            .collect();
        serde_json::to_value(Sidecar {
            u: &self.u,
            v: &self.v,
            literal_map: &self.literal_map,
            frame: &self.frame,
            gadgets,
            regions: &self.regions,
            transformed: &self.formula,
        })
        .expect("plain data")
    }
}

/// Normalizes `f` and lays out its drawing. Deterministic.
///
/// Coordinates grow linearly with the formula; [`ReductionError::LayoutOverflow`]
/// is returned if any would exceed [`MAX_COORDINATE`].
pub fn build_instance(f: &CnfFormula) -> Result<ReductionInstance, ReductionError> {
    let formula = transform_formula(f);
    let l = layout::layout(&formula)?;
    let drawing = CurveSet::new(
        l.curves,
        vec![("u".into(), l.u_point), ("v".into(), l.v_point)],
    )
    .expect("layout ids are unique");
    Ok(ReductionInstance {
        formula,
        drawing,
        u: "u".into(),
        v: "v".into(),
        literal_map: l.literal_map,
        frame: l.frame,
        variables: l.variables,
        clauses: l.clauses,
        regions: l.regions,
        snail: l.snail,
    })
}
