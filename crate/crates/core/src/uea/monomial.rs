use std::fmt;

use crate::lie::LieAlgebra;

/// An ordered PBW monomial `g_{j1} g_{j2} … g_{jk}` with `j1 ≤ j2 ≤ … ≤ jk`
/// in the algebra's basis order. Stored as the sorted word of generator
/// indices; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(j: usize) -> Self {
        Monomial(vec![j as u8])
    }

    /// Builds the monomial with the given exponents, `exps[j]` for `g_j`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut w = Vec::new();
        for (j, &e) in exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(j as u8, e as usize));
        }
        Monomial(w)
    }

    /// Wraps a word that is already sorted.
    pub(crate) fn from_sorted(w: Vec<u8>) -> Self {
        debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
        Monomial(w)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// `(generator, exponent)` pairs in basis order.
    pub fn exponents(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, e)) if *h == g as usize => *e += 1,
                _ => out.push((g as usize, 1)),
            }
        }
        out
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.0.iter().filter(|&&g| g as usize == j).count() as u32
    }

    pub fn display<'a>(&'a self, alg: &'a LieAlgebra) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, alg }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    alg: &'a LieAlgebra,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .m
            .exponents()
            .into_iter()
            .map(|(g, e)| {
                let n = self.alg.generator_name(g);
                if e == 1 {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
