use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::Algebra;
use crate::scalars::GaussianRational as G;
use crate::uea::{TensorElement, UEAElement};

/// A series `Σ_{d=0}^{N} ħ^d a_d` truncated at order `N`, with coefficients
/// `a_d` in U(g)^{⊗rank}. Rank 1 stands for U(g) itself.
#[derive(Clone)]
pub struct GradedSeries {
    alg: Algebra,
    rank: usize,
    parts: Vec<TensorElement<G>>,
}

fn rat(n: i64, d: i64) -> G {
    G::from(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

impl PartialEq for GradedSeries {
    fn eq(&self, o: &Self) -> bool {
        self.rank == o.rank && self.parts == o.parts
    }
}

impl Eq for GradedSeries {}

impl GradedSeries {
    pub fn zero(alg: &Algebra, rank: usize, order: usize) -> Self {
        GradedSeries { alg: alg.clone(), rank, parts: vec![TensorElement::zero(alg, rank); order + 1] }
    }

    pub fn one(alg: &Algebra, rank: usize, order: usize) -> Self {
        let mut s = Self::zero(alg, rank, order);
        s.parts[0] = TensorElement::one(alg, rank);
        s
    }

    /// `ħ^deg · t`, dropped when `deg > order`.
    pub fn monomial(t: TensorElement<G>, deg: usize, order: usize) -> Self {
        let mut s = Self::zero(t.algebra(), t.rank(), order);
        if deg <= order {
            s.parts[deg] = t;
        }
        s
    }

    /// Rank-1 series from elements of U(g), indexed by degree.
    pub fn from_elements(alg: &Algebra, parts: &[UEAElement<G>], order: usize) -> Self {
        let mut s = Self::zero(alg, 1, order);
        for (d, x) in parts.iter().enumerate().take(order + 1) {
            s.parts[d] = TensorElement::from_element(x);
        }
        s
    }

    pub fn from_parts(alg: &Algebra, rank: usize, parts: Vec<TensorElement<G>>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|p| p.rank() != rank) {
            return Err(Error::Invalid("series parts must be nonempty and of one rank".into()));
        }
        Ok(GradedSeries { alg: alg.clone(), rank, parts })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, d: usize) -> &TensorElement<G> {
        &self.parts[d]
    }

    pub fn parts(&self) -> &[TensorElement<G>] {
        &self.parts
    }

    /// Degree-`d` part of a rank-1 series as an element of U(g).
    pub fn element(&self, d: usize) -> Result<UEAElement<G>> {
        self.parts[d].to_element()
    }

    /// Lowest degree with a nonzero part.
    pub fn valuation(&self) -> Option<usize> {
        self.parts.iter().position(|p| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Total number of stored terms across degrees.
    pub fn size(&self) -> usize {
        self.parts.iter().map(TensorElement::term_count).sum()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.parts.truncate(order + 1);
        while s.parts.len() < order + 1 {
            s.parts.push(TensorElement::zero(&self.alg, self.rank));
        }
        s
    }

    fn check(&self, o: &Self) -> Result<usize> {
        if self.rank != o.rank || self.alg.id() != o.alg.id() {
            return Err(Error::Invalid("series of different rank or algebra".into()));
        }
        Ok(self.order().min(o.order()))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let n = self.check(o)?;
        let parts = (0..=n).map(|d| self.parts[d].try_add(&o.parts[d])).collect::<Result<_>>()?;
        Ok(GradedSeries { alg: self.alg.clone(), rank: self.rank, parts })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_parts(|p| p.neg())
    }

    pub fn scale(&self, k: &G) -> Self {
        self.map_parts(|p| p.scale(k))
    }

    pub fn map_parts(&self, f: impl Fn(&TensorElement<G>) -> TensorElement<G>) -> Self {
        GradedSeries { alg: self.alg.clone(), rank: self.rank, parts: self.parts.iter().map(f).collect() }
    }

    pub fn try_map_parts(
        &self,
        f: impl Fn(&TensorElement<G>) -> Result<TensorElement<G>> + Sync + Send,
    ) -> Result<Self> {
        let parts: Vec<TensorElement<G>> = self.parts.par_iter().map(f).collect::<Result<_>>()?;
        let rank = parts[0].rank();
        Ok(GradedSeries { alg: self.alg.clone(), rank, parts })
    }

    /// Truncated Cauchy product; the result has the smaller of both orders.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let n = self.check(o)?;
        self.convolve(o, n, |a, b| a.try_mul(b))
    }

    /// Degree-wise tensor product `self ⊗ o`.
    pub fn outer(&self, o: &Self) -> Result<Self> {
        if self.alg.id() != o.alg.id() {
            return Err(Error::Invalid("series over different algebras".into()));
        }
        let n = self.order().min(o.order());
        self.convolve(o, n, |a, b| a.outer(b))
    }

    fn convolve(
        &self,
        o: &Self,
        n: usize,
        op: impl Fn(&TensorElement<G>, &TensorElement<G>) -> Result<TensorElement<G>> + Sync + Send,
    ) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (0..=n)
            .flat_map(|d| (0..=d).map(move |i| (i, d - i)))
            .filter(|&(i, j)| !self.parts[i].is_zero() && !o.parts[j].is_zero())
            .collect();
        let prods: Vec<(usize, TensorElement<G>)> = pairs
            .par_iter()
            .map(|&(i, j)| Ok((i + j, op(&self.parts[i], &o.parts[j])?)))
            .collect::<Result<_>>()?;
        let rank = match prods.first() {
            Some((_, t)) => t.rank(),
            None => op(&self.parts[0], &o.parts[0])?.rank(),
        };
        let mut parts = vec![TensorElement::zero(&self.alg, rank); n + 1];
        for (d, t) in prods {
            parts[d].add_assign(&t)?;
        }
        Ok(GradedSeries { alg: self.alg.clone(), rank, parts })
    }

    /// `ħ^k · self` for `k ≥ 0`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(&self.alg, self.rank, n);
        for d in 0..=n {
            if d + k <= n {
                s.parts[d + k] = self.parts[d].clone();
            }
        }
        s
    }

    /// `ħ^{−k} · self`; the order drops by `k` and the low parts must vanish.
    pub fn shift_down(&self, k: usize, what: &str) -> Result<Self> {
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(Error::NonPolynomialSpecialization(format!(
                    "{what}: valuation {v} cannot absorb the factor of degree -{k}"
                )));
            }
        }
        if k > self.order() {
            return Err(Error::Invalid(format!("{what}: shift by {k} exceeds the order")));
        }
        Ok(GradedSeries {
            alg: self.alg.clone(),
            rank: self.rank,
            parts: self.parts[k..].to_vec(),
        })
    }

    /// `Σ_k a_k self^k` for `k ≤ order`; requires valuation ≥ 1.
    pub fn compose(&self, coeffs: impl Fn(usize) -> G, what: &str) -> Result<Self> {
        if self.valuation() == Some(0) {
            return Err(Error::SeriesValuation(what.to_string()));
        }
        let n = self.order();
        let mut out = Self::one(&self.alg, self.rank, n).scale(&coeffs(0));
        let mut pow = Self::one(&self.alg, self.rank, n);
        for k in 1..=n {
            pow = pow.try_mul(self)?;
            if pow.is_zero() {
                break;
            }
            let a = coeffs(k);
            if !a.is_zero() {
                out = out.try_add(&pow.scale(&a))?;
            }
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self> {
        let mut fact = BigInt::from(1);
        let mut table = vec![G::one()];
        for k in 1..=self.order() {
            fact *= k;
            table.push(G::from(BigRational::new(BigInt::from(1), fact.clone())));
        }
        self.compose(|k| table[k].clone(), "exp")
    }

    /// `log(1 + s)`.
    pub fn log1p(&self) -> Result<Self> {
        self.compose(
            |k| if k == 0 { G::zero() } else { rat(if k % 2 == 1 { 1 } else { -1 }, k as i64) },
            "log1p",
        )
    }

    /// `sqrt(1 + s)`.
    pub fn sqrt1p(&self) -> Result<Self> {
        // binom(1/2, k) by the recurrence c_k = c_{k-1} (3/2 − k)/k
        let mut table = vec![G::one()];
        for k in 1..=self.order() as i64 {
            let prev = table.last().cloned().expect("seeded");
            table.push(&prev * &rat(3 - 2 * k, 2 * k));
        }
        self.compose(|k| table[k].clone(), "sqrt1p")
    }

    pub fn arctan(&self) -> Result<Self> {
        self.compose(
            |k| match k % 4 {
                1 => rat(1, k as i64),
                3 => rat(-1, k as i64),
                _ => G::zero(),
            },
            "arctan",
        )
    }

    /// `1 / (1 + s)`.
    pub fn geom_inv(&self) -> Result<Self> {
        self.compose(|k| if k % 2 == 0 { G::one() } else { G::from_int(-1) }, "geom_inv")
    }

    /// Multiplicative inverse of a series whose degree-0 part is `c·1` with
    /// `c ≠ 0`, by the Neumann recursion `F⁻¹ = c⁻¹ Σ (1 − c⁻¹F)^k`.
    pub fn inverse(&self) -> Result<Self> {
        let unit = vec![crate::uea::Monomial::unit(); self.rank];
        let c = self.parts[0].coeff(&unit);
        let head = TensorElement::one(&self.alg, self.rank).scale(&c);
        if c.is_zero() || self.parts[0] != head {
            return Err(Error::Invalid("series inverse needs a scalar leading term".into()));
        }
        let ci = c.inv()?;
        let dev = Self::one(&self.alg, self.rank, self.order()).try_sub(&self.scale(&ci))?;
        Ok(dev.compose(|_| G::one(), "inverse")?.scale(&ci))
    }

    /// Degree-wise equality up to `order`; returns the first differing degree.
    pub fn first_difference(&self, o: &Self, order: usize) -> Option<usize> {
        (0..=order.min(self.order()).min(o.order())).find(|&d| self.parts[d] != o.parts[d])
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (d, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            write!(f, "[h^{d}] {p}")?;
            any = true;
        }
        if !any {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
