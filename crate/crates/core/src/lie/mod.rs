//! Finite-dimensional Lie algebras given by structure constants, their
//! elements, basis changes and the built-in Lorentz/Poincaré algebras.

mod algebra;
mod basis;
pub mod builtin;
mod element;
mod span;

pub use algebra::{Algebra, ConstVec, LieAlgebra, LieAlgebraBuilder};
pub use basis::{transport_structure, BasisMap, ImageSpec};
pub use element::LieElement;
pub(crate) use element::{fmt_coeff, same_algebra};
pub use span::{invert, rref, subalgebra_closure, Row, Span};
