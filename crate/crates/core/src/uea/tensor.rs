use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::element::{fmt_term, times_const, UEAElement};
use super::hopf::{antipode_monomial, coproduct_monomial};
use super::monomial::Monomial;
use super::pbw::multiply_monomials;
use crate::error::{Error, Result};
use crate::lie::{same_algebra, Algebra};
use crate::scalars::{Coeff, GaussianRational, Scalar};

type Key = Vec<Monomial>;

/// An element of U(g)^{⊗rank}: sparse map from slotwise PBW monomials to
/// coefficients. Slots are independent copies of U(g).
#[derive(Clone)]
pub struct TensorElement<C: Coeff = Scalar> {
    alg: Algebra,
    rank: usize,
    terms: BTreeMap<Key, C>,
}

impl<C: Coeff> PartialEq for TensorElement<C> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.id() == o.alg.id() && self.rank == o.rank && self.terms == o.terms
    }
}

impl<C: Coeff> Eq for TensorElement<C> {}

fn add_into<C: Coeff>(map: &mut BTreeMap<Key, C>, k: Key, c: C) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
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

impl<C: Coeff> TensorElement<C> {
    pub fn zero(alg: &Algebra, rank: usize) -> Self {
        TensorElement { alg: Arc::clone(alg), rank, terms: BTreeMap::new() }
    }

    pub fn one(alg: &Algebra, rank: usize) -> Self {
        let mut t = Self::zero(alg, rank);
        t.terms.insert(vec![Monomial::unit(); rank], C::one());
        t
    }

    /// `x_1 ⊗ x_2 ⊗ …`.
    pub fn pure(factors: &[&UEAElement<C>]) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::Invalid("empty tensor product".into()))?;
        let alg = first.algebra();
        let mut cur: Vec<(Key, C)> = vec![(Vec::new(), C::one())];
        for x in factors {
            same_algebra(alg, x.algebra())?;
            let mut next = Vec::with_capacity(cur.len() * x.term_count());
            for (k, c) in &cur {
                for (m, d) in x.terms() {
                    let mut k2 = k.clone();
                    k2.push(m.clone());
                    next.push((k2, c.times(d)));
                }
            }
            cur = next;
        }
        let mut t = Self::zero(alg, factors.len());
        for (k, c) in cur {
            add_into(&mut t.terms, k, c);
        }
        Ok(t)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial], &C)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[Monomial]) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, key: Vec<Monomial>, c: C) {
        debug_assert_eq!(key.len(), self.rank);
        add_into(&mut self.terms, key, c);
    }

    fn compatible(&self, o: &Self) -> Result<()> {
        same_algebra(&self.alg, &o.alg)?;
        if self.rank != o.rank {
            return Err(Error::Invalid(format!("tensor ranks differ: {} vs {}", self.rank, o.rank)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.compatible(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, o: &Self) -> Result<()> {
        self.compatible(o)?;
        for (k, c) in &o.terms {
            add_into(&mut self.terms, k.clone(), c.clone());
        }
        Ok(())
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.alg, self.rank);
        }
        self.map_coeffs(|c| c.times(k))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TensorElement<D> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            add_into(&mut terms, k.clone(), f(c));
        }
        TensorElement { alg: Arc::clone(&self.alg), rank: self.rank, terms }
    }

    /// Slotwise product `(a1⊗a2)(b1⊗b2) = a1b1 ⊗ a2b2`.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.compatible(o)?;
        let mut out = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let c = c1.times(c2);
                self.mul_keys(k1, k2, &c, &mut out);
            }
        }
        Ok(TensorElement { alg: Arc::clone(&self.alg), rank: self.rank, terms: out })
    }

    fn mul_keys(&self, k1: &Key, k2: &Key, c: &C, out: &mut BTreeMap<Key, C>) {
        let mut cur: Vec<(Key, GaussianRational)> =
            vec![(Vec::with_capacity(self.rank), GaussianRational::one())];
        for s in 0..self.rank {
            let combo = multiply_monomials(&self.alg, &k1[s], &k2[s]);
            if combo.len() == 1 && combo[0].1.is_one() {
                for (k, _) in cur.iter_mut() {
                    k.push(combo[0].0.clone());
                }
                continue;
            }
            let mut next = Vec::with_capacity(cur.len() * combo.len());
            for (k, d) in &cur {
                for (m, e) in combo.iter() {
                    let mut k2 = k.clone();
                    k2.push(m.clone());
                    next.push((k2, d * e));
                }
            }
            cur = next;
        }
        for (k, d) in cur {
            add_into(out, k, times_const(c, &d));
        }
    }

    /// Tensor product `self ⊗ o`; ranks add.
    pub fn outer(&self, o: &Self) -> Result<Self> {
        same_algebra(&self.alg, &o.alg)?;
        let mut out = Self::zero(&self.alg, self.rank + o.rank);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                add_into(&mut out.terms, k, c1.times(c2));
            }
        }
        Ok(out)
    }

    /// `xy − yx`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    /// Places slot `i` of `self` into slot `slots[i]` of a rank-`rank`
    /// tensor, filling the remaining slots with the unit.
    pub fn embed(&self, rank: usize, slots: &[usize]) -> Result<Self> {
        if slots.len() != self.rank || slots.iter().any(|&s| s >= rank) {
            return Err(Error::Invalid(format!("bad slot embedding {slots:?} into rank {rank}")));
        }
        let mut out = Self::zero(&self.alg, rank);
        for (k, c) in &self.terms {
            let mut key = vec![Monomial::unit(); rank];
            for (i, &s) in slots.iter().enumerate() {
                key[s] = k[i].clone();
            }
            add_into(&mut out.terms, key, c.clone());
        }
        Ok(out)
    }

    /// Applies the coproduct to slot `slot`; the result has rank + 1 with
    /// the two new legs at `slot` and `slot + 1`.
    pub fn coproduct_at(&self, slot: usize) -> Result<Self> {
        self.check_slot(slot)?;
        let mut out = Self::zero(&self.alg, self.rank + 1);
        for (k, c) in &self.terms {
            for (a, b, mult) in coproduct_monomial(&k[slot]) {
                let mut key = Vec::with_capacity(self.rank + 1);
                key.extend_from_slice(&k[..slot]);
                key.push(a);
                key.push(b);
                key.extend_from_slice(&k[slot + 1..]);
                add_into(&mut out.terms, key, times_const(c, &GaussianRational::from(mult)));
            }
        }
        Ok(out)
    }

    /// Applies the counit to slot `slot`; the result has rank − 1 (a rank-1
    /// result is still a tensor; see [`TensorElement::to_element`]).
    pub fn counit_at(&self, slot: usize) -> Result<Self> {
        self.check_slot(slot)?;
        let mut out = Self::zero(&self.alg, self.rank - 1);
        for (k, c) in &self.terms {
            if k[slot].is_unit() {
                let mut key = k.clone();
                key.remove(slot);
                add_into(&mut out.terms, key, c.clone());
            }
        }
        Ok(out)
    }

    pub fn antipode_at(&self, slot: usize) -> Result<Self> {
        self.check_slot(slot)?;
        let mut out = Self::zero(&self.alg, self.rank);
        for (k, c) in &self.terms {
            for (m, d) in antipode_monomial(&self.alg, &k[slot]).iter() {
                let mut key = k.clone();
                key[slot] = m.clone();
                add_into(&mut out.terms, key, times_const(c, d));
            }
        }
        Ok(out)
    }

    /// Multiplies slots `slot` and `slot + 1` together.
    pub fn multiply_slots(&self, slot: usize) -> Result<Self> {
        if slot + 1 >= self.rank {
            return Err(Error::Invalid(format!("no slot pair at {slot} in rank {}", self.rank)));
        }
        let mut out = Self::zero(&self.alg, self.rank - 1);
        for (k, c) in &self.terms {
            for (m, d) in multiply_monomials(&self.alg, &k[slot], &k[slot + 1]).iter() {
                let mut key = k.clone();
                key.remove(slot + 1);
                key[slot] = m.clone();
                add_into(&mut out.terms, key, times_const(c, d));
            }
        }
        Ok(out)
    }

    /// Reverses the slot order (`a⊗b ↦ b⊗a` in rank 2).
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(&self.alg, self.rank);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key.reverse();
            add_into(&mut out.terms, key, c.clone());
        }
        out
    }

    /// Applies `f` to the monomial in slot `slot`, replacing it by the
    /// returned element.
    pub fn apply_at(
        &self,
        slot: usize,
        f: impl Fn(&Monomial) -> UEAElement<C>,
    ) -> Result<Self> {
        self.check_slot(slot)?;
        let mut out = Self::zero(&self.alg, self.rank);
        for (k, c) in &self.terms {
            for (m, d) in f(&k[slot]).terms() {
                let mut key = k.clone();
                key[slot] = m.clone();
                add_into(&mut out.terms, key, c.times(d));
            }
        }
        Ok(out)
    }

    /// Rank-1 tensor as a plain element.
    pub fn to_element(&self) -> Result<UEAElement<C>> {
        if self.rank != 1 {
            return Err(Error::Invalid(format!("rank {} tensor is not an element", self.rank)));
        }
        let mut x = UEAElement::zero(&self.alg);
        for (k, c) in &self.terms {
            x.add_term(k[0].clone(), c.clone());
        }
        Ok(x)
    }

    pub fn from_element(x: &UEAElement<C>) -> Self {
        let mut t = Self::zero(x.algebra(), 1);
        for (m, c) in x.terms() {
            add_into(&mut t.terms, vec![m.clone()], c.clone());
        }
        t
    }

    /// Keeps only terms whose total PBW degree across slots is `≤ max`.
    pub fn truncate_degree(&self, max: usize) -> Self {
        let mut out = Self::zero(&self.alg, self.rank);
        for (k, c) in &self.terms {
            if k.iter().map(Monomial::degree).sum::<usize>() <= max {
                out.terms.insert(k.clone(), c.clone());
            }
        }
        out
    }

    fn check_slot(&self, slot: usize) -> Result<()> {
        if slot >= self.rank {
            return Err(Error::Invalid(format!("slot {slot} out of range for rank {}", self.rank)));
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Display for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let body: Vec<String> =
                    k.iter().map(|m| m.display(&self.alg).to_string()).collect();
                let body = body.join(" (x) ");
                if k.iter().all(Monomial::is_unit) {
                    format!("{c}*{body}")
                } else {
                    fmt_term(&c.to_string(), &body)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
