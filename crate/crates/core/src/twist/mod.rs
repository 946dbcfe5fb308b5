//! Truncated ħ-series over U(g)^{⊗n} and the twist machinery built on
//! them: construction from recipes, cocycle and counit checks, twisted
//! coproduct and antipode, the u and ω elements, and local r-symmetry.
//!
//! Every deformation parameter is specialized to `ħ·c` before any series is
//! formed, so truncation at order N is a plain cut in ħ-degree. Logarithms,
//! arctangents and square roots are formal Maclaurin compositions.

mod build;
mod checks;
mod series;

pub use build::{
    build_entry_twist, build_twist, specialize_tensor, Specializer, Twist, TwistFactor,
};
pub use checks::{
    binomial_jordanian, classical_limit, classical_limit_check, cocycle_check,
    cocycle_check_series, constant_series, coproduct_series, counit_check, factors_commute,
    inverse_check, local_r_symmetry_check, omega_conjugate, omega_element,
    twisted_antipode_axiom, twisted_antipode_series, twisted_coproduct,
    twisted_coproduct_series, u_element, SeriesCheck, Symmetry,
};
pub use series::GradedSeries;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 3;
