//! Deciding whether an edge `uv` can be added to a simple drawing so that the
//! result is still simple.
//!
//! The new edge may not cross the edges at `u` or `v` and may cross every
//! other edge at most once, so an insertion is a dual path that never reuses
//! a color.

mod kernel;
mod search;

pub use kernel::{kernelize, Kernel, KernelSize};
pub use search::{memo_search, shortcut, NogoodSearch, OutOfBudget, PathSearch};

use crate::drawing::{colored_dual, DrawingError, Planarization, VertexId, Witness};
use serde::Serialize;
use thiserror::Error;

/// Default node-expansion budget.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest number of kernel colors handled by the memoized search.
pub const MEMO_COLOR_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Exhaustive search on the input drawing ([`NogoodSearch`]).
    Oracle,
    /// Kernelize, then search memoized on (face, used colors).
    Fpt,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("search budget of {0} nodes exhausted")]
    Timeout(u64),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", content = "witness", rename_all = "lowercase")]
pub enum Answer {
    Yes(Witness),
    No,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes_expanded: u64,
    pub kernel: KernelSize,
}

/// Map a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchedMap {
    Input,
    Kernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionDecision {
    #[serde(flatten)]
    pub answer: Answer,
    /// Which planarization the witness's face and arc ids belong to.
    pub witness_on: SearchedMap,
    pub stats: Stats,
}

impl InsertionDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes(_))
    }
}

/// Decides whether `uv` can be inserted.
///
/// `Oracle` searches the colored dual of `p` itself with [`NogoodSearch`]
/// and reports witnesses in its ids. `Fpt` searches the kernel (see [`kernelize`]) and reports
/// witnesses in the kernel's ids; kernels with more than
/// [`MEMO_COLOR_CAP`] colors are searched without memoization.
pub fn insertable(
    p: &Planarization,
    u: VertexId,
    v: VertexId,
    strategy: Strategy,
    budget: u64,
) -> Result<InsertionDecision, InsertionError> {
    // Validates u and v.
    let dual = colored_dual(p, u, v)?;
    let timeout = |_| InsertionError::Timeout(budget);
    match strategy {
        Strategy::Oracle => {
            let mut s = NogoodSearch::new(&dual, budget);
            let w = s.first().map_err(timeout)?;
            Ok(InsertionDecision {
                answer: w.map_or(Answer::No, Answer::Yes),
                witness_on: SearchedMap::Input,
                stats: Stats {
                    nodes_expanded: s.nodes,
                    kernel: KernelSize::of(p),
                },
            })
        }
        Strategy::Fpt => {
            let k = kernelize(p, u, v);
            let kd = colored_dual(&k.map, k.u, k.v)?;
            let (w, nodes) = if kd.num_colors <= MEMO_COLOR_CAP {
                memo_search(&kd, budget).map_err(timeout)?
            } else {
                let mut s = PathSearch::new(&kd, budget);
                let w = s.first().map_err(timeout)?;
                (w, s.nodes)
            };
            Ok(InsertionDecision {
                answer: w.map_or(Answer::No, Answer::Yes),
                witness_on: SearchedMap::Kernel,
                stats: Stats {
                    nodes_expanded: nodes,
                    kernel: KernelSize::of(&k.map),
                },
            })
        }
    }
}

/// All witnesses on the input drawing, up to `limit`, in search order.
pub fn enumerate_witnesses(
    p: &Planarization,
    u: VertexId,
    v: VertexId,
    limit: usize,
    budget: u64,
) -> Result<Vec<Witness>, InsertionError> {
    let dual = colored_dual(p, u, v)?;
    let mut s = PathSearch::new(&dual, budget);
    s.all(limit).map_err(|_| InsertionError::Timeout(budget))
}
