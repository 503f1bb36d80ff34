//! Exact computations in the degenerate affine oriented Brauer-Clifford
//! supercategory: scalars, normal diagrams, the rewriting engine, the
//! q(n) tensor-space functor and the walled Brauer-Clifford presentation.

pub mod diagrams;
pub mod engine;
pub mod scalars;
pub mod schurweyl;
pub mod tikz;
pub mod walled;

pub use diagrams::{DiagramError, End, Matching, Mode, NormalDiagram, Orient, Strand, Word};
pub use scalars::{BubblePolynomial, DeltaSpec, GaussianRational, ScalarError, Var};
