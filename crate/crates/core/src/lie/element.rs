use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Scalar};

/// A linear combination of basis generators with [`Scalar`] coefficients.
#[derive(Clone)]
pub struct LieElement {
    alg: Algebra,
    coeffs: BTreeMap<usize, Scalar>,
}

impl PartialEq for LieElement {
    fn eq(&self, o: &Self) -> bool {
        self.alg.id() == o.alg.id() && self.coeffs == o.coeffs
    }
}

impl Eq for LieElement {}

pub(crate) fn same_algebra(a: &Algebra, b: &Algebra) -> Result<()> {
    if a.id() == b.id() {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(a.name().to_string(), b.name().to_string()))
    }
}

impl LieElement {
    pub fn zero(alg: &Algebra) -> Self {
        LieElement { alg: Arc::clone(alg), coeffs: BTreeMap::new() }
    }

    pub fn basis(alg: &Algebra, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(j, Scalar::one());
        LieElement { alg: Arc::clone(alg), coeffs }
    }

    pub fn generator(alg: &Algebra, name: &str) -> Result<Self> {
        Ok(LieElement::basis(alg, alg.index_of(name)?))
    }

    pub fn from_terms(alg: &Algebra, terms: &[(&str, Scalar)]) -> Result<Self> {
        let mut x = LieElement::zero(alg);
        for (n, c) in terms {
            x.add_term(alg.index_of(n)?, c);
        }
        Ok(x)
    }

    pub fn from_map(alg: &Algebra, coeffs: BTreeMap<usize, Scalar>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LieElement { alg: Arc::clone(alg), coeffs }
    }

    pub fn from_const(alg: &Algebra, v: &[(usize, GaussianRational)]) -> Self {
        let mut x = LieElement::zero(alg);
        for (j, c) in v {
            x.add_term(*j, &Scalar::constant(c.clone()));
        }
        x
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(j, c)| (*j, c))
    }

    pub fn coeff_map(&self) -> &BTreeMap<usize, Scalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, j: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(j).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn try_add(&self, o: &LieElement) -> Result<LieElement> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = self.clone();
        for (j, c) in &o.coeffs {
            out.add_term(*j, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &LieElement) -> Result<LieElement> {
        self.try_add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, k: &Scalar) -> LieElement {
        if k.is_zero() {
            return LieElement::zero(&self.alg);
        }
        let coeffs = self.coeffs.iter().map(|(j, c)| (*j, c.mul(k))).collect();
        LieElement { alg: Arc::clone(&self.alg), coeffs }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, o: &LieElement) -> Result<LieElement> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = LieElement::zero(&self.alg);
        for (j, a) in &self.coeffs {
            for (k, b) in &o.coeffs {
                let ab = a.mul(b);
                for (l, c) in self.alg.bracket_basis(*j, *k) {
                    out.add_term(*l, &ab.scale(c));
                }
            }
        }
        Ok(out)
    }

    /// Antilinear star: conjugates coefficients and applies the basis map.
    /// Re-expresses the element over an algebra whose basis contains every
    /// generator name used here.
    pub fn embed(&self, target: &Algebra) -> Result<LieElement> {
        let mut out = LieElement::zero(target);
        for (j, c) in &self.coeffs {
            out.add_term(target.index_of(self.alg.generator_name(*j))?, c);
        }
        Ok(out)
    }

    pub fn star(&self) -> Result<LieElement> {
        let mut out = LieElement::zero(&self.alg);
        for (j, c) in &self.coeffs {
            let cc = c.conj()?;
            for (l, d) in self.alg.star_basis(*j)? {
                out.add_term(*l, &cc.scale(d));
            }
        }
        Ok(out)
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    /// Panics on mixed algebras; use [`LieElement::try_add`] for a checked sum.
    fn add(self, o: &LieElement) -> LieElement {
        self.try_add(o).expect("sum of elements from different algebras")
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        self.try_sub(o).expect("difference of elements from different algebras")
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul<&LieElement> for &Scalar {
    type Output = LieElement;
    fn mul(self, x: &LieElement) -> LieElement {
        x.scale(self)
    }
}

pub(crate) fn fmt_coeff(c: &Scalar, name: &str) -> String {
    if c.is_one() {
        return name.to_string();
    }
    if c.neg().is_one() {
        return format!("-{name}");
    }
    let s = c.to_string();
    if s.contains(" + ") || s.contains(" - ") {
        format!("({s})*{name}")
    } else {
        format!("{s}*{name}")
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(j, c)| fmt_coeff(c, self.alg.generator_name(*j)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
