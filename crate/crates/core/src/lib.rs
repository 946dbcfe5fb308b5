//! Exact symbolic verification of classical r-matrices on the Lorentz and
//! Poincare algebras, and of the Drinfeld twists that quantize them.
//!
//! Scalars are rational functions over Q(i) in named deformation
//! parameters. Twists are truncated series in ħ over the enveloping algebra,
//! obtained by sending each parameter to ħ times a constant.

pub mod catalog;
pub mod error;
pub mod lie;
pub mod rmatrix;
pub mod scalars;
pub mod twist;
pub mod uea;

pub use error::{Error, Result};
pub use lie::{Algebra, BasisMap, LieAlgebra, LieElement};
pub use uea::{TensorElement, UEAElement};
pub use scalars::{Coeff, GaussianRational, ParamSymbol, Reality, Scalar, SpecializationMap};
