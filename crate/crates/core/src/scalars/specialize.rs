use std::collections::BTreeMap;
use std::fmt;

use super::gaussian::GaussianRational;
use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Default constants used to send each deformation parameter to `ħ·c`.
pub const DEFAULT_CONSTANTS: [(&str, i64, i64); 12] = [
    ("alpha", 2, 3),
    ("alphat", 5, 7),
    ("alpha1", 3, 5),
    ("alpha2", 7, 11),
    ("beta", 4, 9),
    ("beta1", 3, 5),
    ("beta2", 5, 8),
    ("gamma", 2, 7),
    ("gamma1", 6, 11),
    ("lambda", 1, 1),
    ("chi", 1, 1),
    ("xi", 1, 2),
];

/// Assigns every parameter (by name, regardless of reality flag) an ħ-degree
/// and a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationMap {
    assignments: BTreeMap<String, (u32, GaussianRational)>,
}

impl Default for SpecializationMap {
    fn default() -> Self {
        let mut m = SpecializationMap { assignments: BTreeMap::new() };
        for (name, n, d) in DEFAULT_CONSTANTS {
            m.assignments.insert(name.to_string(), (1, GaussianRational::from_ratio(n, d)));
        }
        m
    }
}

impl SpecializationMap {
    pub fn empty() -> Self {
        SpecializationMap { assignments: BTreeMap::new() }
    }

    /// Sets `name ↦ ħ·c`.
    pub fn set(&mut self, name: &str, c: GaussianRational) -> Result<()> {
        if c.is_zero() {
            return Err(Error::InvalidSpecialization(format!("`{name}` sent to zero")));
        }
        self.assignments.insert(name.to_string(), (1, c));
        Ok(())
    }

    pub fn with(mut self, name: &str, c: GaussianRational) -> Result<Self> {
        self.set(name, c)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&(u32, GaussianRational)> {
        self.assignments.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &(u32, GaussianRational))> {
        self.assignments.iter()
    }

    fn eval(&self, p: &Poly) -> Result<HbarPoly> {
        let mut out = HbarPoly::zero();
        for (m, c) in p.terms() {
            let mut deg = 0i64;
            let mut k = c.clone();
            for &(s, e) in m.factors() {
                let name = s.name();
                let (d, v) = self.get(&name).ok_or(Error::MissingSpecialization(name))?;
                deg += *d as i64 * e as i64;
                k = &k * &v.pow(e);
            }
            out.add_term(deg, k);
        }
        Ok(out)
    }

    /// Laurent image of `s`; negative ħ-powers are allowed.
    pub fn specialize_laurent(&self, s: &Scalar) -> Result<HbarPoly> {
        let num = self.eval(s.num())?;
        let den = self.eval(s.den())?;
        let (&d, c) = match (den.terms.len(), den.terms.iter().next()) {
            (1, Some(t)) => t,
            _ => {
                return Err(Error::NonPolynomialSpecialization(format!(
                    "denominator of {s} is not a single power of the grading parameter"
                )))
            }
        };
        let k = c.inv()?;
        let mut out = HbarPoly::zero();
        for (e, v) in num.terms {
            out.add_term(e - d, &v * &k);
        }
        Ok(out)
    }

    /// Polynomial image of `s`; any negative ħ-power is an error.
    pub fn specialize(&self, s: &Scalar) -> Result<HbarPoly> {
        let out = self.specialize_laurent(s)?;
        match out.valuation() {
            Some(v) if v < 0 => Err(Error::NonPolynomialSpecialization(format!(
                "{s} has degree {v} in the grading parameter"
            ))),
            _ => Ok(out),
        }
    }
}

/// A Laurent polynomial in the single grading parameter ħ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HbarPoly {
    pub terms: BTreeMap<i64, GaussianRational>,
}

impl HbarPoly {
    pub fn zero() -> Self {
        HbarPoly::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = HbarPoly::zero();
        p.add_term(0, c);
        p
    }

    pub fn add_term(&mut self, deg: i64, c: GaussianRational) {
        let e = self.terms.entry(deg).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest ħ-power present.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, deg: i64) -> GaussianRational {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }
}

impl fmt::Display for HbarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 => format!("{c}*h"),
                _ => format!("{c}*h^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
