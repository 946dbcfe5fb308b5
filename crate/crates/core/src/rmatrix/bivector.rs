use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::lie::{fmt_coeff, same_algebra, subalgebra_closure, Algebra, LieElement, Row, Span};
use crate::scalars::Scalar;

/// An element of ∧²g stored as `Σ c_{jk} g_j∧g_k` over `j < k`, with
/// `x∧y = x⊗y − y⊗x`.
#[derive(Clone)]
pub struct Bivector {
    alg: Algebra,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl PartialEq for Bivector {
    fn eq(&self, o: &Self) -> bool {
        self.alg.id() == o.alg.id() && self.coeffs == o.coeffs
    }
}

impl Eq for Bivector {}

impl Bivector {
    pub fn zero(alg: &Algebra) -> Self {
        Bivector { alg: alg.clone(), coeffs: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub(crate) fn add_basis(&mut self, j: usize, k: usize, c: &Scalar) {
        if j == k || c.is_zero() {
            return;
        }
        let (key, c) = if j < k { ((j, k), c.clone()) } else { ((k, j), c.neg()) };
        let e = self.coeffs.entry(key).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// `x∧y` for arbitrary elements.
    pub fn wedge(x: &LieElement, y: &LieElement) -> Result<Self> {
        same_algebra(x.algebra(), y.algebra())?;
        let mut b = Bivector::zero(x.algebra());
        b.add_wedge(&Scalar::one(), x, y);
        Ok(b)
    }

    fn add_wedge(&mut self, k: &Scalar, x: &LieElement, y: &LieElement) {
        for (j, a) in x.terms() {
            for (l, b) in y.terms() {
                self.add_basis(j, l, &k.mul(&a.mul(b)));
            }
        }
    }

    /// Sum `Σ c·(x∧y)` over generator-name pairs.
    pub fn from_terms(alg: &Algebra, terms: &[(Scalar, &str, &str)]) -> Result<Self> {
        let mut b = Bivector::zero(alg);
        for (c, x, y) in terms {
            b.add_basis(alg.index_of(x)?, alg.index_of(y)?, c);
        }
        Ok(b)
    }

    pub fn coeff(&self, j: usize, k: usize) -> Scalar {
        match j.cmp(&k) {
            std::cmp::Ordering::Less => self.coeffs.get(&(j, k)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => {
                self.coeffs.get(&(k, j)).map(|c| c.neg()).unwrap_or_default()
            }
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn try_add(&self, o: &Bivector) -> Result<Bivector> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = self.clone();
        for ((j, k), c) in &o.coeffs {
            out.add_basis(*j, *k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Bivector) -> Result<Bivector> {
        self.try_add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, k: &Scalar) -> Bivector {
        let mut out = Bivector::zero(&self.alg);
        if k.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(key, c)| (*key, c.mul(k))).collect();
        out
    }

    /// Rows of the antisymmetric coefficient matrix; their span is the span
    /// of either leg of the tensor.
    pub fn leg_rows(&self) -> Vec<Row> {
        let mut rows: BTreeMap<usize, Row> = BTreeMap::new();
        for ((j, k), c) in &self.coeffs {
            rows.entry(*j).or_default().insert(*k, c.clone());
            rows.entry(*k).or_default().insert(*j, c.neg());
        }
        rows.into_values().collect()
    }

    /// Echelonized basis of the leg span.
    pub fn legs(&self) -> Vec<LieElement> {
        let mut s = Span::new();
        for r in self.leg_rows() {
            s.insert(&r);
        }
        s.rows().iter().map(|r| LieElement::from_map(&self.alg, r.clone())).collect()
    }

    /// The subalgebra generated by the legs.
    pub fn support(&self) -> Result<Vec<LieElement>> {
        subalgebra_closure(&self.alg, &self.legs())
    }

    /// `δ_x(r) = [x⊗1 + 1⊗x, r]`.
    pub fn adjoint_action(&self, x: &LieElement) -> Result<Bivector> {
        same_algebra(&self.alg, x.algebra())?;
        let mut out = Bivector::zero(&self.alg);
        for (a, xa) in x.terms() {
            for ((j, k), c) in &self.coeffs {
                let k0 = xa.mul(c);
                for (l, s) in self.alg.bracket_basis(a, *j) {
                    out.add_basis(*l, *k, &k0.scale(s));
                }
                for (l, s) in self.alg.bracket_basis(a, *k) {
                    out.add_basis(*j, *l, &k0.scale(s));
                }
            }
        }
        Ok(out)
    }

    /// Legwise star with the direct lifting `(x⊗y)* = x*⊗y*`.
    pub fn star_direct(&self) -> Result<Bivector> {
        let mut out = Bivector::zero(&self.alg);
        for ((j, k), c) in &self.coeffs {
            let x = LieElement::basis(&self.alg, *j).star()?;
            let y = LieElement::basis(&self.alg, *k).star()?;
            out.add_wedge(&c.conj()?, &x, &y);
        }
        Ok(out)
    }

    /// Legwise star with the flipped lifting `(x⊗y)* = y*⊗x*`.
    pub fn star_flipped(&self) -> Result<Bivector> {
        Ok(self.star_direct()?.scale(&Scalar::from_int(-1)))
    }

    /// Every coefficient passed through `f`; used for specialization and
    /// parameter substitution.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Bivector> {
        let mut out = Bivector::zero(&self.alg);
        for ((j, k), c) in &self.coeffs {
            out.add_basis(*j, *k, &f(c)?);
        }
        Ok(out)
    }

    /// Re-expresses the bivector over another algebra whose basis contains
    /// every generator name used here.
    pub fn embed(&self, target: &Algebra) -> Result<Bivector> {
        let mut out = Bivector::zero(target);
        for ((j, k), c) in &self.coeffs {
            let a = target.index_of(self.alg.generator_name(*j))?;
            let b = target.index_of(self.alg.generator_name(*k))?;
            out.add_basis(a, b, c);
        }
        Ok(out)
    }
}

impl std::ops::Add for &Bivector {
    type Output = Bivector;
    fn add(self, o: &Bivector) -> Bivector {
        self.try_add(o).expect("sum of bivectors from different algebras")
    }
}

impl std::ops::Sub for &Bivector {
    type Output = Bivector;
    fn sub(self, o: &Bivector) -> Bivector {
        self.try_sub(o).expect("difference of bivectors from different algebras")
    }
}

impl fmt::Display for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((j, k), c)| {
                let name =
                    format!("{}^{}", self.alg.generator_name(*j), self.alg.generator_name(*k));
                fmt_coeff(c, &name)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
