use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::lie::{Algebra, LieElement};
use crate::scalars::{ParamSymbol, Scalar};

/// A formal power series in one enveloping algebra, described by how it is
/// composed from Lie elements. Coefficients carry the deformation
/// parameters, so every [`Series::Lie`] leaf must vanish at ħ = 0 for the
/// analytic functions below to make sense.
#[derive(Clone, Debug)]
pub enum Series {
    Lie(LieElement),
    Sum(Vec<Series>),
    Product(Vec<Series>),
    Scaled(Scalar, Box<Series>),
    /// `log(1 + s)`
    Log1p(Box<Series>),
    /// `arctan(s)`
    Arctan(Box<Series>),
    /// `1 / (1 + s)`
    GeomInv(Box<Series>),
    /// `exp(s)`
    Exp(Box<Series>),
    /// `sqrt(1 + s)`
    Sqrt1p(Box<Series>),
}

impl Series {
    pub fn lie(x: LieElement) -> Series {
        Series::Lie(x)
    }

    /// `σ = ½ log(1 + ξ y)`.
    pub fn sigma(xi_y: LieElement) -> Series {
        Series::Scaled(Scalar::from_ratio(1, 2), Box::new(Series::Log1p(Box::new(Series::Lie(xi_y)))))
    }

    pub fn scaled(self, k: Scalar) -> Series {
        Series::Scaled(k, Box::new(self))
    }

    /// Transports every Lie leaf to `target` by generator names.
    pub fn embed(&self, target: &Algebra) -> Result<Series> {
        let boxed = |s: &Series| -> Result<Box<Series>> { Ok(Box::new(s.embed(target)?)) };
        let all = |v: &[Series]| -> Result<Vec<Series>> { v.iter().map(|s| s.embed(target)).collect() };
        Ok(match self {
            Series::Lie(x) => Series::Lie(x.embed(target)?),
            Series::Sum(v) => Series::Sum(all(v)?),
            Series::Product(v) => Series::Product(all(v)?),
            Series::Scaled(k, s) => Series::Scaled(k.clone(), boxed(s)?),
            Series::Log1p(s) => Series::Log1p(boxed(s)?),
            Series::Arctan(s) => Series::Arctan(boxed(s)?),
            Series::GeomInv(s) => Series::GeomInv(boxed(s)?),
            Series::Exp(s) => Series::Exp(boxed(s)?),
            Series::Sqrt1p(s) => Series::Sqrt1p(boxed(s)?),
        })
    }

    pub fn params(&self, out: &mut BTreeSet<ParamSymbol>) {
        match self {
            Series::Lie(x) => {
                for (_, c) in x.terms() {
                    out.extend(c.vars());
                }
            }
            Series::Sum(v) | Series::Product(v) => v.iter().for_each(|s| s.params(out)),
            Series::Scaled(k, s) => {
                out.extend(k.vars());
                s.params(out);
            }
            Series::Log1p(s)
            | Series::Arctan(s)
            | Series::GeomInv(s)
            | Series::Exp(s)
            | Series::Sqrt1p(s) => s.params(out),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Series], sep: &str| {
            v.iter().map(|s| format!("{s}")).collect::<Vec<_>>().join(sep)
        };
        match self {
            Series::Lie(x) => write!(f, "({x})"),
            Series::Sum(v) => write!(f, "({})", join(v, " + ")),
            Series::Product(v) => write!(f, "{}", join(v, "*")),
            Series::Scaled(k, s) => write!(f, "({k})*{s}"),
            Series::Log1p(s) => write!(f, "log1p{s}"),
            Series::Arctan(s) => write!(f, "arctan{s}"),
            Series::GeomInv(s) => write!(f, "1/(1 + {s})"),
            Series::Exp(s) => write!(f, "exp{s}"),
            Series::Sqrt1p(s) => write!(f, "sqrt1p{s}"),
        }
    }
}

/// One summand of an exponent in U(g)⊗U(g).
#[derive(Clone, Debug)]
pub enum TensorTerm {
    /// `a ⊗ b`
    Tensor(Series, Series),
    /// `a ∧ b = a⊗b − b⊗a`
    Wedge(Series, Series),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// exponential of a bilinear form in commuting Lie elements
    Abelian,
    /// exponential involving σ = ½ log(1 + ξ y0)
    Jordanian,
    /// exponential of composite series such as σ∧φ
    Series,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Abelian => "abelian",
            FactorKind::Jordanian => "jordanian",
            FactorKind::Series => "series",
        })
    }
}

/// `exp(Σ c·term)`.
#[derive(Clone, Debug)]
pub struct FactorRecipe {
    pub label: String,
    pub kind: FactorKind,
    pub terms: Vec<(Scalar, TensorTerm)>,
}

impl FactorRecipe {
    pub fn new(label: &str, kind: FactorKind) -> Self {
        FactorRecipe { label: label.to_string(), kind, terms: Vec::new() }
    }

    pub fn tensor(mut self, c: Scalar, a: Series, b: Series) -> Self {
        self.terms.push((c, TensorTerm::Tensor(a, b)));
        self
    }

    pub fn wedge(mut self, c: Scalar, a: Series, b: Series) -> Self {
        self.terms.push((c, TensorTerm::Wedge(a, b)));
        self
    }

    pub fn embed(&self, target: &Algebra) -> Result<FactorRecipe> {
        let terms = self
            .terms
            .iter()
            .map(|(c, t)| {
                Ok((
                    c.clone(),
                    match t {
                        TensorTerm::Tensor(a, b) => TensorTerm::Tensor(a.embed(target)?, b.embed(target)?),
                        TensorTerm::Wedge(a, b) => TensorTerm::Wedge(a.embed(target)?, b.embed(target)?),
                    },
                ))
            })
            .collect::<Result<_>>()?;
        Ok(FactorRecipe { label: self.label.clone(), kind: self.kind, terms })
    }

    pub fn params(&self) -> BTreeSet<ParamSymbol> {
        let mut out = BTreeSet::new();
        for (c, t) in &self.terms {
            out.extend(c.vars());
            let (TensorTerm::Tensor(a, b) | TensorTerm::Wedge(a, b)) = t;
            a.params(&mut out);
            b.params(&mut out);
        }
        out
    }
}

impl fmt::Display for FactorRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, t)| {
                let body = match t {
                    TensorTerm::Tensor(a, b) => format!("{a} (x) {b}"),
                    TensorTerm::Wedge(a, b) => format!("{a} ^ {b}"),
                };
                if c.is_one() {
                    body
                } else {
                    format!("({c}) {body}")
                }
            })
            .collect();
        write!(f, "{} [{}] = exp({})", self.label, self.kind, parts.join(" + "))
    }
}
