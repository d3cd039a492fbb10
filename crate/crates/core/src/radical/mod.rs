//! Hoehnke radicals, Kurosh-Amitsur conditions and connectedness checks
//! over finite universes.

mod catalog;
mod class;
mod engine;
mod kind;

pub use catalog::{graph_catalog, graph_catalog_rule, topo_catalog, topo_catalog_rule, GRAPH_IDS, TOPO_IDS};
pub use class::{ClassCatalog, ClassPredicate};
pub use engine::*;
pub use kind::{Kind, KindTag, LoopGraphs, LooplessGraphs, Spaces};

use crate::error::CongruenceError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RadicalError {
    #[error("no congruence on {0} has its quotient in the class")]
    NoQualifyingCongruence(String),
    #[error("class `{name}` is defined for {found}, not {expected}")]
    KindMismatch { name: String, expected: &'static str, found: &'static str },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("operation is not available for {0} structures")]
    KindUnsupported(&'static str),
    #[error("no catalog entry `{0}`")]
    BadCatalogId(String),
    #[error("complete graphs missing from the class: {0}")]
    LemmaConditionFailed(String),
    #[error("internal inconsistency: {0}")]
    Defect(String),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

/// Outcome of a universally quantified check. `witness` describes the first
/// counterexample in universe order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict { holds: false, witness: Some(witness.into()) }
    }

    /// First failure among `checks`, or a pass.
    pub fn first_failure<I: IntoIterator<Item = Verdict>>(checks: I) -> Verdict {
        checks.into_iter().find(|v| !v.holds).unwrap_or_else(Verdict::pass)
    }

    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            other()
        } else {
            self
        }
    }
}
