use crate::structures::StructureError;

/// Failures of the congruence calculus, shared by all three kinds.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("partition has {got} elements, carrier has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("congruence topology is not a topology")]
    NotATopology,
    #[error("congruence topology is not contained in the topology of the space")]
    NotSubTopology,
    #[error("open set {0} is not a union of classes")]
    NotSaturated(String),
    #[error("congruence edge set must contain every edge and only possible edges")]
    EdgeSetOutOfRange,
    #[error("substitution fails: {0} is in the edge set but {1} is not")]
    SubstitutionViolated(String, String),
    #[error("class contains the congruence edge {0}-{1}")]
    IndependenceViolated(usize, usize),
    #[error("map is not continuous")]
    NotContinuous,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("invalid congruence: {0}")]
    InvalidCongruence(Box<CongruenceError>),
    #[error("empty list of congruences")]
    EmptyList,
    #[error("first congruence is not contained in the second")]
    NotContained,
    #[error("space is trivial")]
    TrivialSpace,
    #[error("search exhausted without a decomposition")]
    SearchExhausted,
    #[error("graph has the wrong loop policy")]
    PolicyMismatch,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl CongruenceError {
    pub(crate) fn invalid(self) -> CongruenceError {
        match self {
            e @ CongruenceError::InvalidCongruence(_) => e,
            e => CongruenceError::InvalidCongruence(Box::new(e)),
        }
    }
}
