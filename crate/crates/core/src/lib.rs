//! Exact integral (co)homology for connected sums, bundles pulled back over
//! connected sums, and circle bundles over 6-manifolds.
//!
//! All arithmetic is over arbitrary-precision integers.

pub mod abelian;
pub mod chains;
pub mod dsl;
pub mod duality;
mod graded;
pub mod sequences;
pub mod spaces;

pub use abelian::{cokernel, smith_normal_form, FgAbGroup, IntMatrix, SmithForm};
pub use chains::ChainComplex;
pub use dsl::{parse, print, ParseError, SourceSpan};
pub use graded::GradedGroup;
pub use spaces::{chain_model, evaluate, SpaceExpr};
