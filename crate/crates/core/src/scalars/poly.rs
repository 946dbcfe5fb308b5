//! Sparse multivariate polynomials over Q(i) with exact division and gcd.
//!
//! The gcd is the classical recursive primitive-PRS algorithm: pick the largest
//! variable, split off contents, run pseudo-remainder sequences on primitive
//! parts. Inputs here are tiny (a handful of deformation parameters, low
//! degree), so no modular tricks are needed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::gaussian::GaussianRational;
use super::symbol::ParamSymbol;

/// Power product of parameters, sorted by symbol, all exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PMonomial(Vec<(ParamSymbol, u32)>);

impl PMonomial {
    pub fn one() -> Self {
        PMonomial(Vec::new())
    }

    pub fn var(s: ParamSymbol, e: u32) -> Self {
        if e == 0 {
            PMonomial::one()
        } else {
            PMonomial(vec![(s, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(ParamSymbol, u32)] {
        &self.0
    }

    pub fn exponent(&self, s: ParamSymbol) -> u32 {
        self.0.iter().find(|(v, _)| *v == s).map_or(0, |(_, e)| *e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> i64) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (s, e) = match (self.0.get(i), other.0.get(j)) {
                (None, None) => break,
                (Some(&(a, ea)), None) => {
                    i += 1;
                    (a, f(ea, 0))
                }
                (None, Some(&(b, eb))) => {
                    j += 1;
                    (b, f(0, eb))
                }
                (Some(&(a, ea)), Some(&(b, eb))) => {
                    if a < b {
                        i += 1;
                        (a, f(ea, 0))
                    } else if b < a {
                        j += 1;
                        (b, f(0, eb))
                    } else {
                        i += 1;
                        j += 1;
                        (a, f(ea, eb))
                    }
                }
            };
            if e < 0 {
                return None;
            }
            if e > 0 {
                out.push((s, e as u32));
            }
        }
        Some(PMonomial(out))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a as i64 + b as i64).unwrap()
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.merge(other, |a, b| a as i64 - b as i64)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.min(b) as i64).unwrap()
    }

    fn without(&self, s: ParamSymbol) -> Self {
        PMonomial(self.0.iter().copied().filter(|(v, _)| *v != s).collect())
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<PMonomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::term(PMonomial::one(), c)
    }

    pub fn term(m: PMonomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(s: ParamSymbol) -> Self {
        Poly::term(PMonomial::var(s, 1), GaussianRational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(&PMonomial, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Coefficient of the largest monomial in the internal order.
    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.terms.values().next_back()
    }

    pub fn vars(&self) -> BTreeSet<ParamSymbol> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(s, _)| *s)).collect()
    }

    pub fn degree_in(&self, s: ParamSymbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, s: ParamSymbol) -> bool {
        self.terms.keys().any(|m| m.exponent(s) > 0)
    }

    fn add_term(&mut self, m: PMonomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &GaussianRational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_monomial(&self, m: &PMonomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Componentwise minimum of exponents over all terms.
    pub fn monomial_content(&self) -> PMonomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return PMonomial::one(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    pub fn div_monomial(&self, m: &PMonomial) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            terms.insert(t.div(m)?, c.clone());
        }
        Some(Poly { terms })
    }

    /// Splits into coefficients of powers of `s`.
    pub fn coeffs_in(&self, s: ParamSymbol) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(s)).or_default().add_term(m.without(s), c.clone());
        }
        out
    }

    /// Applies `c ↦ conj(c)` to coefficients and `s ↦ sign(s)·s` to parameters.
    pub fn conj_with(&self, sign: impl Fn(ParamSymbol) -> i64) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let odd: i64 = m.0.iter().map(|(s, e)| if sign(*s) < 0 { *e as i64 } else { 0 }).sum();
            let c = c.conj();
            out.add_term(m.clone(), if odd % 2 == 1 { -c } else { c });
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv().ok()?));
        }
        if let Some((m, c)) = d.as_monomial() {
            let k = c.inv().ok()?;
            return self.div_monomial(m).map(|p| p.scale(&k));
        }
        let v = *d.vars().iter().next_back().unwrap();
        let db = d.degree_in(v);
        if self.degree_in(v) < db {
            return None;
        }
        let dc = d.coeffs_in(v);
        let lcd = &dc[&db];
        let mut rem = self.coeffs_in(v);
        let mut quot: BTreeMap<u32, Poly> = BTreeMap::new();
        while let Some((&dr, lcr)) = rem.iter().next_back() {
            if dr < db {
                return None;
            }
            let t = lcr.exact_div(lcd)?;
            let shift = dr - db;
            for (&k, dk) in &dc {
                let e = rem.entry(k + shift).or_default();
                *e = e.sub(&t.mul(dk));
                if e.is_zero() {
                    rem.remove(&(k + shift));
                }
            }
            let q = quot.entry(shift).or_default();
            *q = q.add(&t);
        }
        Some(assemble(v, &quot))
    }

    fn content_in(&self, s: ParamSymbol) -> Poly {
        self.coeffs_in(s).values().fold(Poly::zero(), |g, c| gcd(&g, c))
    }

    fn primitive_in(&self, s: ParamSymbol) -> Poly {
        let c = self.content_in(s);
        self.exact_div(&c).expect("content divides")
    }
}

fn assemble(s: ParamSymbol, coeffs: &BTreeMap<u32, Poly>) -> Poly {
    let mut out = Poly::zero();
    for (&k, c) in coeffs {
        for (m, x) in &c.terms {
            out.add_term(m.mul(&PMonomial::var(s, k)), x.clone());
        }
    }
    out
}

fn pseudo_rem(f: &Poly, g: &Poly, s: ParamSymbol) -> Poly {
    let dg = g.degree_in(s);
    let lcg = g.coeffs_in(s).remove(&dg).unwrap();
    // over a constant leading coefficient this is plain division
    let lcg_inv = lcg.as_constant().map(|c| c.inv().unwrap());
    let mut r = f.clone();
    while !r.is_zero() && r.contains_var(s) && r.degree_in(s) >= dg {
        let dr = r.degree_in(s);
        let lcr = r.coeffs_in(s).remove(&dr).unwrap();
        let shift = PMonomial::var(s, dr - dg);
        r = match &lcg_inv {
            Some(k) => r.sub(&g.mul(&lcr.scale(k)).mul_monomial(&shift)),
            None => r.mul(&lcg).sub(&g.mul(&lcr).mul_monomial(&shift)),
        };
    }
    if dg == 0 {
        Poly::zero()
    } else {
        r
    }
}

/// Substitutes small integers for every parameter other than `v`.
fn image_in(p: &Poly, v: ParamSymbol, shift: i64) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        let mut k = c.clone();
        for &(s, e) in &m.0 {
            if s != v {
                let x = GaussianRational::from_int(3 + 2 * (s.index() as i64 % 7) + shift);
                k = &k * &x.pow(e);
            }
        }
        out.add_term(PMonomial::var(v, m.exponent(v)), k);
    }
    out
}

/// Sufficient test for `gcd(f, g)` having degree 0 in `v`: a univariate image
/// that keeps both degrees and has a constant gcd.
fn images_coprime(f: &Poly, g: &Poly, v: ParamSymbol) -> bool {
    let (df, dg) = (f.degree_in(v), g.degree_in(v));
    for shift in [0, 5] {
        let (fi, gi) = (image_in(f, v, shift), image_in(g, v, shift));
        if fi.degree_in(v) != df || gi.degree_in(v) != dg {
            continue;
        }
        let (mut a, mut b) = if df >= dg { (fi, gi) } else { (gi, fi) };
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b, v);
            a = b;
            b = r.monic();
        }
        return !a.contains_var(v);
    }
    false
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if let Some((m, _)) = a.as_monomial() {
        return Poly::term(m.gcd(&b.monomial_content()), GaussianRational::one());
    }
    if let Some((m, _)) = b.as_monomial() {
        return Poly::term(m.gcd(&a.monomial_content()), GaussianRational::one());
    }
    if a.len() <= b.len() {
        if b.exact_div(a).is_some() {
            return a.monic();
        }
    } else if a.exact_div(b).is_some() {
        return b.monic();
    }
    let vars: BTreeSet<_> = a.vars().union(&b.vars()).copied().collect();
    // the main variable of lowest degree keeps remainder sequences short
    let v = *vars
        .iter()
        .min_by_key(|&&s| (a.degree_in(s).max(b.degree_in(s)), std::cmp::Reverse(s)))
        .unwrap();
    if !a.contains_var(v) {
        return gcd(a, &b.content_in(v));
    }
    if !b.contains_var(v) {
        return gcd(&a.content_in(v), b);
    }
    let content = gcd(&a.content_in(v), &b.content_in(v));
    // monic normalization keeps Gaussian-rational coefficients from growing
    let (mut f, mut g) = (a.primitive_in(v).monic(), b.primitive_in(v).monic());
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    if images_coprime(&f, &g, v) {
        return content;
    }
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if !r.contains_var(v) {
            g = Poly::one();
            break;
        }
        f = g;
        g = r.primitive_in(v).monic();
    }
    content.mul(&g.primitive_in(v)).monic()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg_real = c.is_real() && c.re < num_rational::BigRational::from_integer(0.into());
            let (sep, c) = if k == 0 {
                ("", c.clone())
            } else if neg_real {
                (" - ", -c)
            } else {
                (" + ", c.clone())
            };
            write!(f, "{sep}")?;
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if (-&c).is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
