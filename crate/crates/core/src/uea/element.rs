use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::pbw::{multiply_monomials, normalize_word};
use crate::error::Result;
use crate::lie::{same_algebra, Algebra, LieElement};
use crate::scalars::{Coeff, GaussianRational, Scalar};

/// An element of U(g) in PBW normal form: a sparse map from ordered
/// monomials to coefficients, with no zero entries.
#[derive(Clone)]
pub struct UEAElement<C: Coeff = Scalar> {
    alg: Algebra,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> PartialEq for UEAElement<C> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.id() == o.alg.id() && self.terms == o.terms
    }
}

impl<C: Coeff> Eq for UEAElement<C> {}

pub(crate) fn add_into<C: Coeff>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn times_const<C: Coeff>(c: &C, k: &GaussianRational) -> C {
    if k.is_one() {
        c.clone()
    } else {
        c.times(&C::from_gaussian(k.clone()))
    }
}

impl<C: Coeff> UEAElement<C> {
    pub fn zero(alg: &Algebra) -> Self {
        UEAElement { alg: Arc::clone(alg), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, C::one())
    }

    pub fn constant(alg: &Algebra, c: C) -> Self {
        Self::monomial(alg, Monomial::unit(), c)
    }

    pub fn monomial(alg: &Algebra, m: Monomial, c: C) -> Self {
        let mut x = Self::zero(alg);
        add_into(&mut x.terms, m, c);
        x
    }

    pub fn generator(alg: &Algebra, j: usize) -> Self {
        Self::monomial(alg, Monomial::generator(j), C::one())
    }

    /// `Σ c_j g_j` from explicit generator coefficients.
    pub fn linear(alg: &Algebra, coeffs: &[(usize, C)]) -> Self {
        let mut x = Self::zero(alg);
        for (j, c) in coeffs {
            add_into(&mut x.terms, Monomial::generator(*j), c.clone());
        }
        x
    }

    /// Normal form of `coeff · g_{w1} g_{w2} …` for an arbitrary word.
    pub fn from_word(alg: &Algebra, word: &[usize], coeff: C) -> Self {
        let mut x = Self::zero(alg);
        for (m, k) in normalize_word(alg, word).iter() {
            add_into(&mut x.terms, m.clone(), times_const(&coeff, k));
        }
        x
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Highest PBW degree present (0 for constants and zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        add_into(&mut self.terms, m, c);
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            add_into(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.alg);
        }
        self.map_coeffs(|c| c.times(k))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UEAElement<D> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_into(&mut terms, m.clone(), f(c));
        }
        UEAElement { alg: Arc::clone(&self.alg), terms }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.times(c2);
                for (m, k) in multiply_monomials(&self.alg, m1, m2).iter() {
                    add_into(&mut out, m.clone(), times_const(&c, k));
                }
            }
        }
        Ok(UEAElement { alg: Arc::clone(&self.alg), terms: out })
    }

    /// `x^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one(&self.alg);
        for _ in 0..n {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// `xy − yx`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::unit())
    }
}

impl UEAElement<Scalar> {
    /// Embeds a Lie element as a degree-one element.
    pub fn from_lie(x: &LieElement) -> Self {
        let mut out = Self::zero(x.algebra());
        for (j, c) in x.terms() {
            add_into(&mut out.terms, Monomial::generator(j), c.clone());
        }
        out
    }
}

impl<C: Coeff> fmt::Display for UEAElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| fmt_term(&c.to_string(), &m.display(&self.alg).to_string()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for UEAElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders `c·body`, dropping a unit coefficient and bracketing sums.
pub(crate) fn fmt_term(c: &str, body: &str) -> String {
    if body == "1" {
        return c.to_string();
    }
    match c {
        "1" => body.to_string(),
        "-1" => format!("-{body}"),
        _ if c.contains(" + ") || c.contains(" - ") => format!("({c})*{body}"),
        _ => format!("{c}*{body}"),
    }
}
