use std::fmt;

use super::series::GradedSeries;
use crate::catalog::{FactorKind, FactorRecipe, Series, TensorTerm};
use crate::error::{Error, Result};
use crate::lie::{Algebra, LieElement};
use crate::scalars::{GaussianRational as G, HbarPoly, Scalar, SpecializationMap};
use crate::uea::{Monomial, TensorElement, UEAElement};

/// Specialized view of recipes: every parameter becomes `ħ·constant`.
pub struct Specializer<'a> {
    map: &'a SpecializationMap,
}

fn lowest(p: &HbarPoly) -> i64 {
    p.valuation().unwrap_or(0)
}

impl<'a> Specializer<'a> {
    pub fn new(map: &'a SpecializationMap) -> Self {
        Specializer { map }
    }

    pub fn scalar(&self, s: &Scalar) -> Result<HbarPoly> {
        self.map.specialize_laurent(s)
    }

    /// Rank-1 series of a Lie element. Coefficients must have nonnegative
    /// degree.
    pub fn lie(&self, x: &LieElement, order: usize) -> Result<GradedSeries> {
        let alg = x.algebra();
        let mut parts = vec![UEAElement::<G>::zero(alg); order + 1];
        for (j, c) in x.terms() {
            let hp = self.scalar(c)?;
            for (&d, v) in &hp.terms {
                if d < 0 {
                    return Err(Error::NonPolynomialSpecialization(format!(
                        "coefficient {c} of a Lie leaf has degree {d}"
                    )));
                }
                if (d as usize) <= order {
                    parts[d as usize].add_term(Monomial::generator(j), v.clone());
                }
            }
        }
        Ok(GradedSeries::from_elements(alg, &parts, order))
    }

    /// `k·s` where `s` is produced on demand at a given order; negative
    /// degrees of `k` are absorbed by computing `s` further out.
    fn scaled(
        &self,
        k: &Scalar,
        order: usize,
        what: &str,
        inner: impl Fn(usize) -> Result<GradedSeries>,
    ) -> Result<GradedSeries> {
        let hp = self.scalar(k)?;
        let margin = (-lowest(&hp)).max(0) as usize;
        let s = inner(order + margin)?;
        let mut out: Option<GradedSeries> = None;
        for (&d, v) in &hp.terms {
            let term = if d >= 0 {
                s.shift_up(d as usize).truncate(order)
            } else {
                s.shift_down((-d) as usize, what)?.truncate(order)
            }
            .scale(v);
            out = Some(match out {
                Some(o) => o.try_add(&term)?,
                None => term,
            });
        }
        Ok(out.unwrap_or_else(|| GradedSeries::zero(s.algebra(), s.rank(), order)))
    }

    pub fn series(&self, alg: &Algebra, s: &Series, order: usize) -> Result<GradedSeries> {
        match s {
            Series::Lie(x) => self.lie(x, order),
            Series::Sum(v) => {
                let mut out = GradedSeries::zero(alg, 1, order);
                for t in v {
                    out = out.try_add(&self.series(alg, t, order)?)?;
                }
                Ok(out)
            }
            Series::Product(v) => {
                let mut out = GradedSeries::one(alg, 1, order);
                for t in v {
                    out = out.try_mul(&self.series(alg, t, order)?)?;
                }
                Ok(out)
            }
            Series::Scaled(k, t) => {
                self.scaled(k, order, &format!("{s}"), |n| self.series(alg, t, n))
            }
            Series::Log1p(t) => self.series(alg, t, order)?.log1p(),
            Series::Arctan(t) => self.series(alg, t, order)?.arctan(),
            Series::GeomInv(t) => self.series(alg, t, order)?.geom_inv(),
            Series::Exp(t) => self.series(alg, t, order)?.exp(),
            Series::Sqrt1p(t) => self.series(alg, t, order)?.sqrt1p(),
        }
    }

    fn term(&self, alg: &Algebra, t: &TensorTerm, order: usize) -> Result<GradedSeries> {
        match t {
            TensorTerm::Tensor(a, b) => {
                self.series(alg, a, order)?.outer(&self.series(alg, b, order)?)
            }
            TensorTerm::Wedge(a, b) => {
                let (x, y) = (self.series(alg, a, order)?, self.series(alg, b, order)?);
                x.outer(&y)?.try_sub(&y.outer(&x)?)
            }
        }
    }

    /// The exponent `Σ c·term` of a factor, checked to have valuation ≥ 1.
    pub fn exponent(&self, alg: &Algebra, f: &FactorRecipe, order: usize) -> Result<GradedSeries> {
        let mut out = GradedSeries::zero(alg, 2, order);
        for (c, t) in &f.terms {
            let what = format!("factor {}", f.label);
            let part = self.scaled(c, order, &what, |n| self.term(alg, t, n)).map_err(|e| match e {
                Error::NonPolynomialSpecialization(_) => {
                    Error::Valuation { factor: f.label.clone(), valuation: -1 }
                }
                other => other,
            })?;
            out = out.try_add(&part)?;
        }
        if out.valuation() == Some(0) {
            return Err(Error::Valuation { factor: f.label.clone(), valuation: 0 });
        }
        Ok(out)
    }
}

/// One factor `exp(argument)` of a twist.
#[derive(Clone, Debug)]
pub struct TwistFactor {
    pub label: String,
    pub kind: FactorKind,
    pub argument: GradedSeries,
    pub value: GradedSeries,
}

/// An ordered product of exponential factors, evaluated to a fixed order.
/// The first factor is leftmost in the product.
#[derive(Clone, Debug)]
pub struct Twist {
    pub factors: Vec<TwistFactor>,
    pub value: GradedSeries,
}

impl Twist {
    pub fn algebra(&self) -> &Algebra {
        self.value.algebra()
    }

    pub fn order(&self) -> usize {
        self.value.order()
    }

    /// Wraps an already evaluated two-tensor series as a single-factor twist.
    pub fn from_series(label: &str, value: GradedSeries) -> Self {
        let zero = GradedSeries::zero(value.algebra(), 2, value.order());
        Twist {
            factors: vec![TwistFactor {
                label: label.to_string(),
                kind: FactorKind::Series,
                argument: zero,
                value: value.clone(),
            }],
            value,
        }
    }

    /// The product with the factors in the reverse order.
    pub fn reversed(&self) -> Result<Twist> {
        let factors: Vec<TwistFactor> = self.factors.iter().rev().cloned().collect();
        let value = product(self.algebra(), &factors, self.order())?;
        Ok(Twist { factors, value })
    }
}

fn product(alg: &Algebra, factors: &[TwistFactor], order: usize) -> Result<GradedSeries> {
    let mut v = GradedSeries::one(alg, 2, order);
    for f in factors {
        v = v.try_mul(&f.value)?;
    }
    Ok(v)
}

/// Builds `Π exp(argument_k)` from recipes under the given specialization.
pub fn build_twist(
    alg: &Algebra,
    recipes: &[FactorRecipe],
    map: &SpecializationMap,
    order: usize,
) -> Result<Twist> {
    let sp = Specializer::new(map);
    let mut factors = Vec::with_capacity(recipes.len());
    for r in recipes {
        let argument = sp.exponent(alg, r, order)?;
        let value = argument.exp()?;
        factors.push(TwistFactor { label: r.label.clone(), kind: r.kind, argument, value });
    }
    let value = product(alg, &factors, order)?;
    Ok(Twist { factors, value })
}

/// Builds the twist of a catalog entry (resolving delegation).
pub fn build_entry_twist(
    e: &crate::catalog::CatalogEntry,
    map: &SpecializationMap,
    order: usize,
) -> Result<Twist> {
    let recipes = e.resolved_twist()?.ok_or_else(|| Error::NoTwist(e.id.to_string()))?;
    build_twist(&e.algebra, &recipes, map, order)
}

/// Specializes a symbolic rank-2 tensor; only the listed degree is kept.
pub fn specialize_tensor(
    t: &TensorElement<Scalar>,
    map: &SpecializationMap,
    degree: i64,
) -> Result<TensorElement<G>> {
    let mut out = TensorElement::zero(t.algebra(), t.rank());
    for (k, c) in t.terms() {
        let hp = map.specialize_laurent(c)?;
        if let Some(v) = hp.terms.get(&degree) {
            out.add_term(k.to_vec(), v.clone());
        }
    }
    Ok(out)
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.factors.iter().map(|x| x.label.as_str()).collect();
        writeln!(f, "F = {} (order {})", labels.join(" * "), self.order())?;
        write!(f, "{}", self.value)
    }
}
