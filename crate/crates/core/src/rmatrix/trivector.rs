use std::collections::BTreeMap;
use std::fmt;

use super::bivector::Bivector;
use crate::error::Result;
use crate::lie::{fmt_coeff, same_algebra, Algebra, LieElement};
use crate::scalars::{GaussianRational, Scalar};

/// An element of ∧³g stored over strictly increasing index triples.
#[derive(Clone)]
pub struct Trivector {
    alg: Algebra,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl PartialEq for Trivector {
    fn eq(&self, o: &Self) -> bool {
        self.alg.id() == o.alg.id() && self.coeffs == o.coeffs
    }
}

impl Eq for Trivector {}

/// Sorts three distinct indices, returning the permutation sign.
fn sort3(a: usize, b: usize, c: usize) -> Option<((usize, usize, usize), i64)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = [a, b, c];
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some(((v[0], v[1], v[2]), sign))
}

impl Trivector {
    pub fn zero(alg: &Algebra) -> Self {
        Trivector { alg: alg.clone(), coeffs: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub(crate) fn add_basis(&mut self, a: usize, b: usize, c: usize, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        let Some((key, sign)) = sort3(a, b, c) else {
            return;
        };
        let e = self.coeffs.entry(key).or_default();
        *e = if sign > 0 { e.add(k) } else { e.sub(k) };
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// `x∧y∧z` for arbitrary elements.
    pub fn wedge(x: &LieElement, y: &LieElement, z: &LieElement) -> Result<Self> {
        same_algebra(x.algebra(), y.algebra())?;
        same_algebra(x.algebra(), z.algebra())?;
        let mut t = Trivector::zero(x.algebra());
        for (a, p) in x.terms() {
            for (b, q) in y.terms() {
                let pq = p.mul(q);
                for (c, r) in z.terms() {
                    t.add_basis(a, b, c, &pq.mul(r));
                }
            }
        }
        Ok(t)
    }

    pub fn coeff(&self, a: usize, b: usize, c: usize) -> Scalar {
        match sort3(a, b, c) {
            Some((key, s)) => {
                let v = self.coeffs.get(&key).cloned().unwrap_or_default();
                if s > 0 {
                    v
                } else {
                    v.neg()
                }
            }
            None => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
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

    pub fn try_add(&self, o: &Trivector) -> Result<Trivector> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = self.clone();
        for ((a, b, c), k) in &o.coeffs {
            out.add_basis(*a, *b, *c, k);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Trivector {
        let mut out = Trivector::zero(&self.alg);
        if k.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(key, c)| (*key, c.mul(k))).collect();
        out
    }

    /// Adjoint action extended to ∧³g as a derivation.
    pub fn adjoint_action(&self, x: &LieElement) -> Result<Trivector> {
        same_algebra(&self.alg, x.algebra())?;
        let mut out = Trivector::zero(&self.alg);
        for (g, xg) in x.terms() {
            for ((a, b, c), k) in &self.coeffs {
                let k0 = xg.mul(k);
                for (l, s) in self.alg.bracket_basis(g, *a) {
                    out.add_basis(*l, *b, *c, &k0.scale(s));
                }
                for (l, s) in self.alg.bracket_basis(g, *b) {
                    out.add_basis(*a, *l, *c, &k0.scale(s));
                }
                for (l, s) in self.alg.bracket_basis(g, *c) {
                    out.add_basis(*a, *b, *l, &k0.scale(s));
                }
            }
        }
        Ok(out)
    }

    /// True when every basis generator annihilates the trivector.
    pub fn is_ad_invariant(&self) -> bool {
        (0..self.alg.dim()).all(|g| {
            self.adjoint_action(&LieElement::basis(&self.alg, g))
                .map(|t| t.is_zero())
                .unwrap_or(false)
        })
    }

    /// Drops every component whose generator degrees differ from `degrees`
    /// (as a multiset) under the algebra grading.
    pub fn graded_part(&self, degrees: [i32; 3]) -> Trivector {
        let gr = self.alg.grading();
        let mut want = degrees;
        want.sort();
        let mut out = Trivector::zero(&self.alg);
        for ((a, b, c), k) in &self.coeffs {
            let mut d = [gr[*a], gr[*b], gr[*c]];
            d.sort();
            if d == want {
                out.coeffs.insert((*a, *b, *c), k.clone());
            }
        }
        out
    }
}

/// Schouten bracket on ∧²g with the convention
/// `[[x∧y, u∧v]] = [x,u]∧y∧v − [x,v]∧y∧u − [y,u]∧x∧v + [y,v]∧x∧u`.
pub fn schouten(r1: &Bivector, r2: &Bivector) -> Result<Trivector> {
    same_algebra(r1.algebra(), r2.algebra())?;
    let alg = r1.algebra();
    let mut out = Trivector::zero(alg);
    let minus = GaussianRational::from_int(-1);
    for ((x, y), p) in r1.terms() {
        for ((u, v), q) in r2.terms() {
            let pq = p.mul(q);
            let terms = [
                (x, u, y, v, false),
                (x, v, y, u, true),
                (y, u, x, v, true),
                (y, v, x, u, false),
            ];
            for (a, b, c, d, neg) in terms {
                if c == d {
                    continue;
                }
                for (l, s) in alg.bracket_basis(a, b) {
                    let s = if neg { s * &minus } else { s.clone() };
                    out.add_basis(*l, c, d, &pq.scale(&s));
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((a, b, c), k)| {
                let name = format!(
                    "{}^{}^{}",
                    self.alg.generator_name(*a),
                    self.alg.generator_name(*b),
                    self.alg.generator_name(*c)
                );
                fmt_coeff(k, &name)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
