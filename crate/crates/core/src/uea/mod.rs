//! The universal enveloping algebra in PBW normal form, its tensor powers
//! and the undeformed Hopf structure.
//!
//! Elements are generic over the coefficient type: symbolic [`Scalar`]s for
//! exact identities in the deformation parameters, Gaussian rationals once
//! parameters have been specialized for series truncation.
//!
//! [`Scalar`]: crate::scalars::Scalar

mod element;
mod hopf;
mod monomial;
mod pbw;
mod tensor;

pub use element::UEAElement;
pub use hopf::{
    antipode, antipode_monomial, bivector_tensor, coproduct, coproduct_monomial, counit,
    cybe_lhs_tensor,
};
pub use monomial::{Monomial, MonomialDisplay};
pub use pbw::{left_multiply, memo_size, multiply_monomials, normalize_word, Combo};
pub use tensor::TensorElement;

use crate::rmatrix::Trivector;
use crate::scalars::Scalar;

/// Embeds a trivector as its six-term antisymmetrization in U(g)^{⊗3}.
pub fn trivector_tensor(t: &Trivector) -> TensorElement<Scalar> {
    let mut out = TensorElement::zero(t.algebra(), 3);
    for ((a, b, c), k) in t.terms() {
        let g = [Monomial::generator(a), Monomial::generator(b), Monomial::generator(c)];
        for (p, sign) in [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([1, 0, 2], -1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
        ] {
            let key = p.iter().map(|&i| g[i].clone()).collect();
            out.add_term(key, if sign > 0 { k.clone() } else { k.neg() });
        }
    }
    out
}
