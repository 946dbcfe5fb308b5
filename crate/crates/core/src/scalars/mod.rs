//! Exact coefficients: Gaussian rationals, formal deformation parameters and
//! rational functions in them, plus specialization to a single grading
//! parameter ħ used for series truncation.

mod gaussian;
mod poly;
mod scalar;
mod specialize;
mod symbol;

pub use gaussian::GaussianRational;
pub use poly::{gcd, PMonomial, Poly};
pub use scalar::{Coeff, Scalar};
pub use specialize::{HbarPoly, SpecializationMap, DEFAULT_CONSTANTS};
pub use symbol::{ParamSymbol, Reality, KNOWN_PARAMS};
