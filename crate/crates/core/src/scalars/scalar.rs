use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;
use super::poly::{gcd, PMonomial, Poly};
use super::symbol::ParamSymbol;
use crate::error::{Error, Result};

/// Coefficient ring interface shared by exact constants and rational functions.
pub trait Coeff:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_gaussian(g: GaussianRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_int(n))
    }

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.plus(o);
    }
}

impl Coeff for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        g
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
}

/// A rational function in the deformation parameters over Q(i), kept in
/// reduced form with a monic denominator, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Scalar::constant(GaussianRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(GaussianRational::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::constant(GaussianRational::from_ratio(n, d))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn param(s: ParamSymbol) -> Self {
        Scalar { num: Poly::var(s), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: Poly::one() }
    }

    /// Builds `num/den` and canonicalizes.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            let k = c.inv().expect("nonzero denominator");
            return Scalar { num: num.scale(&k), den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let k = lc.inv().unwrap();
            Scalar { num: num.scale(&k), den: den.scale(&k) }
        }
    }

    /// Re-runs canonicalization; a no-op on values built through this API.
    pub fn canonicalize(&self) -> Self {
        Scalar::reduce(self.num.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn vars(&self) -> std::collections::BTreeSet<ParamSymbol> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.add(&o.num), den: Poly::one() };
        }
        if self.den == o.den {
            return Scalar::reduce(self.num.add(&o.num), self.den.clone());
        }
        if let (Some((m1, _)), Some((m2, _))) = (self.den.as_monomial(), o.den.as_monomial()) {
            // monic monomial denominators: bring both over the lcm
            let g = m1.gcd(m2);
            let l = m1.mul(&m2.div(&g).unwrap());
            let a = self.num.mul_monomial(&l.div(m1).unwrap());
            let b = o.num.mul_monomial(&l.div(m2).unwrap());
            return Scalar::reduce(a.add(&b), Poly::term(l, GaussianRational::one()));
        }
        // with g = gcd(b, d): a/b + c/d = (a·d' + c·b')/(b·d'), and only g
        // can share a factor with the new numerator
        let g = gcd(&self.den, &o.den);
        let b1 = self.den.exact_div(&g).unwrap();
        let d1 = o.den.exact_div(&g).unwrap();
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let den = self.den.mul(&d1);
        if g.is_one() {
            return Scalar::normalize_unit(num, den);
        }
        let h = gcd(&num, &g);
        Scalar::normalize_unit(num.exact_div(&h).unwrap(), den.exact_div(&h).unwrap())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = o.as_constant() {
            return Scalar { num: self.num.scale(&c), den: self.den.clone() };
        }
        if let Some(c) = self.as_constant() {
            return Scalar { num: o.num.scale(&c), den: o.den.clone() };
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        // cross-cancel first so the gcds stay small
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let (n1, d2) = (self.num.exact_div(&g1).unwrap(), o.den.exact_div(&g1).unwrap());
        let (n2, d1) = (o.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap());
        Scalar::normalize_unit(n1.mul(&n2), d1.mul(&d2))
    }

    fn normalize_unit(num: Poly, den: Poly) -> Self {
        if let Some(c) = den.as_constant() {
            let k = c.inv().expect("nonzero denominator");
            return Scalar { num: num.scale(&k), den: Poly::one() };
        }
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let k = lc.inv().unwrap();
            Scalar { num: num.scale(&k), den: den.scale(&k) }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Scalar::one(), |acc, _| acc.mul(&base)))
    }

    /// Complex conjugation: Gaussian conjugation on constants, reality flags on
    /// parameters. Fails on parameters of unrestricted reality.
    pub fn conj(&self) -> Result<Scalar> {
        for s in self.vars() {
            s.conj_sign()?;
        }
        let sign = |s: ParamSymbol| s.conj_sign().unwrap();
        Ok(Scalar::reduce(self.num.conj_with(sign), self.den.conj_with(sign)))
    }

    /// Substitutes another scalar for a parameter.
    pub fn substitute(&self, s: ParamSymbol, v: &Scalar) -> Result<Scalar> {
        let eval = |p: &Poly| -> Scalar {
            let mut acc = Scalar::zero();
            for (m, c) in p.terms() {
                let mut t = Scalar::constant(c.clone());
                let mut rest = Vec::new();
                for &(x, e) in m.factors() {
                    if x == s {
                        t = t.mul(&v.pow(e as i32).unwrap());
                    } else {
                        rest.push(PMonomial::var(x, e));
                    }
                }
                let rest = rest.iter().fold(PMonomial::one(), |a, b| a.mul(b));
                acc = acc.add(&t.mul(&Scalar::from_poly(Poly::term(rest, GaussianRational::one()))));
            }
            acc
        };
        eval(&self.num).div(&eval(&self.den))
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        Scalar::constant(g)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(g: GaussianRational) -> Self {
        Scalar::constant(g)
    }
}

impl From<ParamSymbol> for Scalar {
    fn from(s: ParamSymbol) -> Self {
        Scalar::param(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::symbol::Reality;

    fn p(n: &str) -> Scalar {
        Scalar::param(ParamSymbol::unrestricted(n))
    }

    #[test]
    fn gaussian_norm() {
        let a = Scalar::constant("1+i".parse().unwrap());
        let b = Scalar::constant("1-i".parse().unwrap());
        assert_eq!(a.mul(&b), Scalar::from_int(2));
    }

    #[test]
    fn ratio_cancels() {
        let (b1, b2) = (p("beta1"), p("beta2"));
        assert_eq!(b2.div(&b1).unwrap().mul(&b1), b2);
        let x = b1.add(&b2).div(&b1.mul(&b1).sub(&b2.mul(&b2))).unwrap();
        assert_eq!(x, Scalar::one().div(&b1.sub(&b2)).unwrap());
    }

    #[test]
    fn conj_uses_reality() {
        let b = Scalar::param(ParamSymbol::new("beta1", Reality::Imaginary));
        assert_eq!(b.conj().unwrap(), b.neg());
        let a = Scalar::param(ParamSymbol::new("alpha", Reality::Real));
        let z = a.mul(&Scalar::i()).add(&b.mul(&b));
        assert_eq!(z.conj().unwrap(), a.mul(&Scalar::i()).neg().add(&b.mul(&b)));
        assert!(p("alpha").conj().is_err());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(p("alpha").div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert!(p("alpha").sub(&p("alpha")).inv().is_err());
    }

    #[test]
    fn display() {
        let s = p("gamma").mul(&p("alpha")).div(&p("beta1").mul(&p("beta1"))).unwrap();
        assert_eq!(s.to_string(), "alpha*gamma/beta1^2");
    }
}
