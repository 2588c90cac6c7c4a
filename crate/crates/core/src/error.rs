use thiserror::Error;

use crate::space::{Histogram, ObjectiveFunction, Permutation};

pub type Result<T, E = NflError> = std::result::Result<T, E>;

/// A function together with a permutation that maps it outside of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub function: ObjectiveFunction,
    pub permutation: Permutation,
    pub image: ObjectiveFunction,
}

#[derive(Debug, Error)]
pub enum NflError {
    #[error("enumeration guard exceeded: {what} needs {required} but the limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        required: String,
        limit: u64,
    },
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error("invalid cost domain: {0}")]
    InvalidCostDomain(String),
    #[error("invalid function table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("function set is empty")]
    EmptySet,
    #[error("function set is not closed under permutation: {} composed with {:?} gives {}", .0.function, .0.permutation.image(), .0.image)]
    NotClosed(Box<ClosureWitness>),
    #[error("algorithm `{algorithm}` violated the non-repeating contract by proposing point {point}")]
    ContractViolation { algorithm: String, point: usize },
    #[error("performance measure `{0}` needs a non-empty cost sequence")]
    EmptySequence(String),
    #[error("trace length {m} outside 1..={size}")]
    InvalidLength { m: usize, size: usize },
    #[error("counterexample requested for a set that is closed under permutation")]
    CalledOnClosedSet,
    #[error("counterexample requested for a distribution that is constant on every basis class")]
    CalledOnCompliantDistribution,
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("histogram {0:?} is not valid here")]
    InvalidHistogram(Histogram),
    #[error("neighborhood relation is invariant under every permutation")]
    NoWitness,
    #[error("no function satisfies the constraint")]
    EmptyClass,
    #[error("constraint is not binding: {0}")]
    BoundNotBinding(String),
    #[error("steepness is undefined for an empty neighborhood")]
    UndefinedSteepness,
    #[error("malformed neighborhood: {0}")]
    MalformedNeighborhood(String),
    #[error("exact value needs 2^{exponent} which exceeds the exponent guard {limit}; use the log form")]
    ExactOverflowGuard { exponent: String, limit: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl NflError {
    pub(crate) fn guard(what: &'static str, required: impl ToString, limit: u64) -> Self {
        NflError::GuardExceeded {
            what,
            required: required.to_string(),
            limit,
        }
    }
}
