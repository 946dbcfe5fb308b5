//! The undeformed Hopf structure: primitive coproduct, counit and antipode,
//! plus the left side of the classical Yang-Baxter equation in U(g)^{⊗3}.

use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use super::element::{times_const, UEAElement};
use super::monomial::Monomial;
use super::pbw::{normalize_word, Combo};
use super::tensor::TensorElement;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::rmatrix::Bivector;
use crate::scalars::{Coeff, GaussianRational, Scalar};

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `Δ(m) = Σ mult · m' ⊗ m''` for a PBW monomial. Each generator is
/// primitive and sub-words of an ordered word are ordered, so no rewriting
/// is needed: the terms are indexed by sub-exponent vectors.
pub fn coproduct_monomial(m: &Monomial) -> Vec<(Monomial, Monomial, i64)> {
    let exps = m.exponents();
    let mut out: Vec<(Vec<u8>, Vec<u8>, i64)> = vec![(Vec::new(), Vec::new(), 1)];
    for (g, e) in exps {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (l, r, c) in &out {
            for k in 0..=e {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.extend(std::iter::repeat_n(g as u8, k as usize));
                r2.extend(std::iter::repeat_n(g as u8, (e - k) as usize));
                next.push((l2, r2, c * binomial(e, k)));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r, c)| (Monomial::from_sorted(l), Monomial::from_sorted(r), c))
        .collect()
}

static ANTIPODE: Lazy<DashMap<(u64, Monomial), Combo>> = Lazy::new(DashMap::new);

/// `S(g_1 … g_k) = (−1)^k g_k … g_1`, normalized.
pub fn antipode_monomial(alg: &LieAlgebra, m: &Monomial) -> Combo {
    let key = (alg.id(), m.clone());
    if let Some(hit) = ANTIPODE.get(&key) {
        return Arc::clone(hit.value());
    }
    let word: Vec<usize> = m.word().iter().rev().map(|&g| g as usize).collect();
    let base = normalize_word(alg, &word);
    let out = if m.degree() % 2 == 1 {
        Arc::new(base.iter().map(|(x, c)| (x.clone(), -c)).collect())
    } else {
        base
    };
    ANTIPODE.insert(key, Arc::clone(&out));
    out
}

/// Primitive coproduct extended multiplicatively.
pub fn coproduct<C: Coeff>(x: &UEAElement<C>) -> TensorElement<C> {
    let mut out = TensorElement::zero(x.algebra(), 2);
    for (m, c) in x.terms() {
        for (a, b, k) in coproduct_monomial(m) {
            out.add_term(vec![a, b], times_const(c, &GaussianRational::from(k)));
        }
    }
    out
}

/// `ε(x)`: the coefficient of the unit monomial.
pub fn counit<C: Coeff>(x: &UEAElement<C>) -> C {
    x.constant_term()
}

pub fn antipode<C: Coeff>(x: &UEAElement<C>) -> UEAElement<C> {
    let mut out = UEAElement::zero(x.algebra());
    for (m, c) in x.terms() {
        for (n, k) in antipode_monomial(x.algebra(), m).iter() {
            out.add_term(n.clone(), times_const(c, k));
        }
    }
    out
}

/// `r` as a rank-2 tensor, `x∧y ↦ x⊗y − y⊗x`.
pub fn bivector_tensor(r: &Bivector) -> TensorElement<Scalar> {
    let mut t = TensorElement::zero(r.algebra(), 2);
    for ((j, k), c) in r.terms() {
        let (gj, gk) = (Monomial::generator(j), Monomial::generator(k));
        t.add_term(vec![gj.clone(), gk.clone()], c.clone());
        t.add_term(vec![gk, gj], c.neg());
    }
    t
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]` evaluated in U(g)^{⊗3}.
pub fn cybe_lhs_tensor(r: &Bivector) -> Result<TensorElement<Scalar>> {
    let t = bivector_tensor(r);
    let r12 = t.embed(3, &[0, 1])?;
    let r13 = t.embed(3, &[0, 2])?;
    let r23 = t.embed(3, &[1, 2])?;
    let mut out = r12.commutator(&r13)?;
    out.add_assign(&r12.commutator(&r23)?)?;
    out.add_assign(&r13.commutator(&r23)?)?;
    Ok(out)
}
