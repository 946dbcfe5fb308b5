use super::build::{specialize_tensor, Twist};
use super::series::GradedSeries;
use crate::error::{Error, Result};
use crate::lie::Algebra;
use crate::rmatrix::Bivector;
use crate::scalars::{GaussianRational as G, SpecializationMap};
use crate::uea::{bivector_tensor, coproduct, Monomial, TensorElement, UEAElement};

/// Outcome of a degree-by-degree identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCheck {
    pub order: usize,
    /// Lowest degree at which the two sides differ.
    pub first_failure: Option<usize>,
    /// Difference at the failing degree, rendered.
    pub witness: Option<String>,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    fn compare(lhs: &GradedSeries, rhs: &GradedSeries, order: usize) -> Result<Self> {
        let first_failure = lhs.first_difference(rhs, order);
        let witness = match first_failure {
            Some(d) => Some(lhs.part(d).try_sub(rhs.part(d))?.to_string()),
            None => None,
        };
        Ok(SeriesCheck { order, first_failure, witness })
    }
}

/// `F¹²(Δ⊗id)(F) = F²³(id⊗Δ)(F)` to the twist's order.
pub fn cocycle_check(f: &Twist) -> Result<SeriesCheck> {
    cocycle_check_series(&f.value)
}

pub fn cocycle_check_series(f: &GradedSeries) -> Result<SeriesCheck> {
    let f12 = f.try_map_parts(|p| p.embed(3, &[0, 1]))?;
    let f23 = f.try_map_parts(|p| p.embed(3, &[1, 2]))?;
    let d1 = f.try_map_parts(|p| p.coproduct_at(0))?;
    let d2 = f.try_map_parts(|p| p.coproduct_at(1))?;
    let lhs = f12.try_mul(&d1)?;
    let rhs = f23.try_mul(&d2)?;
    SeriesCheck::compare(&lhs, &rhs, f.order())
}

/// `(ε⊗id)(F) = (id⊗ε)(F) = 1` at every stored degree.
pub fn counit_check(f: &GradedSeries) -> Result<bool> {
    let one = GradedSeries::one(f.algebra(), 1, f.order());
    let left = f.try_map_parts(|p| p.counit_at(0))?;
    let right = f.try_map_parts(|p| p.counit_at(1))?;
    Ok(left == one && right == one)
}

/// `F·F⁻¹ = F⁻¹·F = 1⊗1`.
pub fn inverse_check(f: &GradedSeries) -> Result<bool> {
    let inv = f.inverse()?;
    let one = GradedSeries::one(f.algebra(), 2, f.order());
    Ok(f.try_mul(&inv)? == one && inv.try_mul(f)? == one)
}

/// Embeds a plain element as a constant series.
pub fn constant_series(x: &UEAElement<G>, order: usize) -> GradedSeries {
    GradedSeries::from_elements(x.algebra(), std::slice::from_ref(x), order)
}

/// Applies Δ degree-wise to a rank-1 series.
pub fn coproduct_series(x: &GradedSeries) -> Result<GradedSeries> {
    x.try_map_parts(|p| Ok(coproduct(&p.to_element()?)))
}

/// `Δ^{(F)}(x) = F Δ(x) F⁻¹` for a rank-1 series `x`.
pub fn twisted_coproduct_series(f: &GradedSeries, x: &GradedSeries) -> Result<GradedSeries> {
    let inv = f.inverse()?;
    f.try_mul(&coproduct_series(x)?)?.try_mul(&inv)
}

pub fn twisted_coproduct(f: &Twist, x: &UEAElement<G>) -> Result<GradedSeries> {
    twisted_coproduct_series(&f.value, &constant_series(x, f.order()))
}

/// `u = Σ f⁽¹⁾ S(f⁽²⁾)`.
pub fn u_element(f: &GradedSeries) -> Result<GradedSeries> {
    f.try_map_parts(|p| p.antipode_at(1)?.multiply_slots(0))
}

/// `S^{(F)}(x) = u S(x) u⁻¹` for a rank-1 series `x`.
pub fn twisted_antipode_series(f: &GradedSeries, x: &GradedSeries) -> Result<GradedSeries> {
    let u = u_element(f)?;
    let sx = x.try_map_parts(|p| p.antipode_at(0))?;
    u.try_mul(&sx)?.try_mul(&u.inverse()?)
}

/// `m∘(S^{(F)}⊗id)∘Δ^{(F)}(x) = ε(x)·1`.
pub fn twisted_antipode_axiom(f: &GradedSeries, x: &UEAElement<G>) -> Result<SeriesCheck> {
    let n = f.order();
    let d = twisted_coproduct_series(f, &constant_series(x, n))?;
    let u = u_element(f)?;
    let uinv = u.inverse()?;
    // (S^F ⊗ id) then multiply: Σ u S(a) u⁻¹ b, computed slotwise
    let s_first = d.try_map_parts(|p| p.antipode_at(0))?;
    let u2 = u.try_map_parts(|p| p.outer(&TensorElement::one(f.algebra(), 1)))?;
    let uinv2 = uinv.try_map_parts(|p| p.outer(&TensorElement::one(f.algebra(), 1)))?;
    let conj = u2.try_mul(&s_first)?.try_mul(&uinv2)?;
    let lhs = conj.try_map_parts(|p| p.multiply_slots(0))?;
    let eps = x.constant_term();
    let rhs = GradedSeries::one(f.algebra(), 1, n).scale(&eps);
    SeriesCheck::compare(&lhs, &rhs, n)
}

/// `ω = √u`.
pub fn omega_element(f: &GradedSeries) -> Result<GradedSeries> {
    let u = u_element(f)?;
    let one = GradedSeries::one(f.algebra(), 1, f.order());
    u.try_sub(&one)?.sqrt1p()
}

/// `F^{(ω)} = (ω⁻¹⊗ω⁻¹) F Δ(ω)`.
pub fn omega_conjugate(f: &GradedSeries) -> Result<GradedSeries> {
    let w = omega_element(f)?;
    let wi = w.inverse()?;
    let wiwi = wi.outer(&wi)?;
    wiwi.try_mul(f)?.try_mul(&coproduct_series(&w)?)
}

/// Verdict of the local r-symmetry test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `F = 1 + c·r + O(ħ²)` with the returned `c ≠ 0`.
    Symmetric(G),
    NotSymmetric,
}

/// Compares the degree-1 part of `F` with the degree-1 part of the
/// specialized `r`, read as a tensor `x⊗y − y⊗x`.
pub fn local_r_symmetry_check(
    f: &GradedSeries,
    r: &Bivector,
    map: &SpecializationMap,
) -> Result<Symmetry> {
    if f.order() < 1 {
        return Err(Error::Invalid("local symmetry needs order at least 1".into()));
    }
    let r1 = specialize_tensor(&bivector_tensor(r), map, 1)?;
    let f1 = f.part(1);
    let Some((key, rc)) = r1.terms().next() else {
        return Ok(Symmetry::NotSymmetric);
    };
    let c = f1.coeff(key).checked_div(rc)?;
    if c.is_zero() || *f1 != r1.scale(&c) {
        return Ok(Symmetry::NotSymmetric);
    }
    Ok(Symmetry::Symmetric(c))
}

/// Antisymmetrized degree-1 part `F₁ − τ(F₁)`; for a twist quantizing `r`
/// with the conventions used here this equals `−r`.
pub fn classical_limit(f: &GradedSeries) -> Result<TensorElement<G>> {
    let f1 = f.part(1);
    f1.try_sub(&f1.flip())
}

/// Whether the antisymmetrized first-order part of `F` equals `−r`.
pub fn classical_limit_check(
    f: &GradedSeries,
    r: &Bivector,
    map: &SpecializationMap,
) -> Result<bool> {
    let r1 = specialize_tensor(&bivector_tensor(r), map, 1)?;
    Ok(classical_limit(f)? == r1.neg())
}

/// `1 + Σ_{k≥1} (α^k/k!) x(x−1)⋯(x−k+1) ⊗ y^k` with `α ↦ ħ·alpha`.
pub fn binomial_jordanian(
    alg: &Algebra,
    x: usize,
    y: usize,
    alpha: &G,
    order: usize,
) -> Result<GradedSeries> {
    let mut out = GradedSeries::one(alg, 2, order);
    let xe = UEAElement::<G>::generator(alg, x);
    let mut falling = UEAElement::<G>::one(alg);
    let mut coef = G::one();
    for k in 1..=order {
        let shifted = xe.try_sub(&UEAElement::constant(alg, G::from_int(k as i64 - 1)))?;
        falling = falling.try_mul(&shifted)?;
        coef = &(&coef * alpha) * &G::from_ratio(1, k as i64);
        let yk = UEAElement::monomial(alg, Monomial::from_exponents(&exps(alg.dim(), y, k)), G::one());
        let t = TensorElement::pure(&[&falling, &yk])?.scale(&coef);
        out = out.try_add(&GradedSeries::monomial(t, k, order))?;
    }
    Ok(out)
}

fn exps(dim: usize, j: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[j] = k as u32;
    v
}

/// Whether two twists' factors commute to their common order.
pub fn factors_commute(a: &GradedSeries, b: &GradedSeries) -> Result<SeriesCheck> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    SeriesCheck::compare(&ab, &ba, ab.order())
}
