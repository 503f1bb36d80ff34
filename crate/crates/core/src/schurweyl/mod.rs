//! Schur-Weyl harness over the queer Lie superalgebra q(n).

pub mod coefficients;
pub mod linalg;
pub mod modules;
pub mod psi;
pub mod sergeev;
pub mod verma;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurWeylError {
    #[error("interface mismatch: {0}")]
    Interface(String),
    #[error("PBW degree {degree} exceeds cap {cap}")]
    CapOverflow { degree: usize, cap: usize },
    #[error("bubble symbol {0} is not specialized")]
    Unspecialized(String),
    #[error("invalid weight data: {0}")]
    Weight(String),
    #[error("{0}")]
    Other(String),
}
