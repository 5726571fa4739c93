use thiserror::Error;

use crate::lie::StructureViolation;
use crate::pair::{ActionViolation, CompatibilityViolation, IdealViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid Lie algebra structure: {0}")]
    InvalidStructure(StructureViolation),

    #[error("bracket ({i}, {j}) must name an increasing pair of basis indices")]
    BracketIndex { i: usize, j: usize },

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(IdealViolation),

    #[error("invalid action: {0}")]
    InvalidAction(ActionViolation),

    #[error("incompatible actions: {0}")]
    IncompatibleActions(CompatibilityViolation),

    #[error("linear map is not a Lie homomorphism on basis pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),

    #[error("subspaces belong to different algebras")]
    ParentMismatch,

    #[error("operation needs the second algebra embedded as an ideal of the first")]
    NotEmbedded,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
