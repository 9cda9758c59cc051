//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial does not split over the field; irreducible factor {factor} (enlarge the cyclotomic order)")]
    NotSplit { factor: String },
    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("no nonzero integral exists")]
    NoIntegral,
    #[error("integral space has dimension {0}, expected 1")]
    NotUnique(usize),
    #[error("subspace is not an algebra: {0}")]
    NotAnAlgebra(String),
    #[error("coideal subalgebra is not normal")]
    NotNormal,
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("no R-matrix attached")]
    NoRMatrix,
    #[error("chain is not increasing at step {0}")]
    ChainNotIncreasing(usize),
    #[error("multiplicity is not a non-negative integer: {0}")]
    NonIntegerMultiplicity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Hopf axioms fail: {0}")]
    AxiomFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
