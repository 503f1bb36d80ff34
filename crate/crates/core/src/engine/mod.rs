//! Morphisms of the affine oriented Brauer-Clifford supercategory and their
//! rewriting into the normally ordered basis.

pub mod cyclotomic;
pub mod drawing;
pub mod expr;
pub mod morphism;
pub mod normalize;
pub mod relations;

pub use cyclotomic::Cyclotomic;
pub use expr::GeneratorExpr;
pub use relations::{defining_relations, Relation};
pub use morphism::{compute_g, dot_polynomial, dot_power, hom_basis, loop_value, sigma, Morphism};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("interface mismatch: expected {expected:?}, found {found:?}")]
    InterfaceMismatch { expected: String, found: String },
    #[error("layer does not fit: {0}")]
    BadLayer(String),
    #[error("rewriting did not terminate within the step limit")]
    NonTerminating,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("orientation mismatch: {0}")]
    Orientation(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("bubble symbols remain unspecialized: {0}")]
    Unspecialized(String),
}
