//! PBW rewriting with memoized products.
//!
//! Products of ordered monomials are reduced by the exchange rule
//! `g_k g_j → g_j g_k + [g_k, g_j]` for `j < k`. Results have constant
//! (Gaussian rational) coefficients because the structure constants do, so
//! they are cached per algebra and reused for any coefficient type.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use super::monomial::Monomial;
use crate::lie::LieAlgebra;
use crate::scalars::GaussianRational;

/// A linear combination of monomials with constant coefficients.
pub type Combo = Arc<Vec<(Monomial, GaussianRational)>>;

static LEFT: Lazy<DashMap<(u64, u8, Monomial), Combo>> = Lazy::new(DashMap::new);
static PRODUCT: Lazy<DashMap<(u64, Monomial, Monomial), Combo>> = Lazy::new(DashMap::new);

fn finish(acc: HashMap<Monomial, GaussianRational>) -> Combo {
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Arc::new(v)
}

fn accumulate(acc: &mut HashMap<Monomial, GaussianRational>, combo: &Combo, k: &GaussianRational) {
    for (m, c) in combo.iter() {
        let t = if k.is_one() { c.clone() } else { c * k };
        *acc.entry(m.clone()).or_default() += &t;
    }
}

/// Normal form of `g · m`.
pub fn left_multiply(alg: &LieAlgebra, g: u8, m: &Monomial) -> Combo {
    let w = m.word();
    if w.first().is_none_or(|&a| g <= a) {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(g);
        v.extend_from_slice(w);
        return Arc::new(vec![(Monomial::from_sorted(v), GaussianRational::one())]);
    }
    let key = (alg.id(), g, m.clone());
    if let Some(hit) = LEFT.get(&key) {
        return Arc::clone(hit.value());
    }
    // g a·rest = a (g·rest) + [g, a] rest
    let a = w[0];
    let rest = Monomial::from_sorted(w[1..].to_vec());
    let mut acc = HashMap::new();
    for (mono, c) in left_multiply(alg, g, &rest).iter() {
        accumulate(&mut acc, &left_multiply(alg, a, mono), c);
    }
    for (l, c) in alg.bracket_basis(g as usize, a as usize) {
        accumulate(&mut acc, &left_multiply(alg, *l as u8, &rest), c);
    }
    let out = finish(acc);
    LEFT.insert(key, Arc::clone(&out));
    out
}

/// Normal form of `m1 · m2`.
pub fn multiply_monomials(alg: &LieAlgebra, m1: &Monomial, m2: &Monomial) -> Combo {
    let (w1, w2) = (m1.word(), m2.word());
    match (w1.last(), w2.first()) {
        (None, _) => return Arc::new(vec![(m2.clone(), GaussianRational::one())]),
        (_, None) => return Arc::new(vec![(m1.clone(), GaussianRational::one())]),
        (Some(a), Some(b)) if a <= b => {
            let mut v = w1.to_vec();
            v.extend_from_slice(w2);
            return Arc::new(vec![(Monomial::from_sorted(v), GaussianRational::one())]);
        }
        _ => {}
    }
    if w1.len() == 1 {
        return left_multiply(alg, w1[0], m2);
    }
    let key = (alg.id(), m1.clone(), m2.clone());
    if let Some(hit) = PRODUCT.get(&key) {
        return Arc::clone(hit.value());
    }
    // (g·rest1)·m2 = g·(rest1·m2)
    let rest = Monomial::from_sorted(w1[1..].to_vec());
    let mut acc = HashMap::new();
    for (mono, c) in multiply_monomials(alg, &rest, m2).iter() {
        accumulate(&mut acc, &left_multiply(alg, w1[0], mono), c);
    }
    let out = finish(acc);
    PRODUCT.insert(key, Arc::clone(&out));
    out
}

/// Normal form of an arbitrary word of generator indices.
pub fn normalize_word(alg: &LieAlgebra, word: &[usize]) -> Combo {
    let mut cur: HashMap<Monomial, GaussianRational> = HashMap::new();
    cur.insert(Monomial::unit(), GaussianRational::one());
    for &g in word.iter().rev() {
        let mut next = HashMap::new();
        for (m, c) in &cur {
            accumulate(&mut next, &left_multiply(alg, g as u8, m), c);
        }
        cur = next;
    }
    finish(cur)
}

/// Number of cached products, for diagnostics.
pub fn memo_size() -> usize {
    LEFT.len() + PRODUCT.len()
}
