use std::collections::BTreeMap;

use super::algebra::Algebra;
use super::element::{same_algebra, LieElement};
use crate::error::Result;
use crate::scalars::Scalar;

pub type Row = BTreeMap<usize, Scalar>;

/// A subspace kept in reduced row echelon form over the rational-function
/// field. Rows are normalized so that their pivot (first key) is 1 and no
/// other row has an entry in a pivot column.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<Row>,
}

fn axpy(target: &mut Row, k: &Scalar, v: &Row) {
    for (j, c) in v {
        let e = target.entry(*j).or_default();
        *e = e.sub(&k.mul(c));
        if e.is_zero() {
            target.remove(j);
        }
    }
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Remainder of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &Row) -> Row {
        let mut r = v.clone();
        r.retain(|_, c| !c.is_zero());
        for row in &self.rows {
            let p = *row.keys().next().unwrap();
            if let Some(c) = r.get(&p).cloned() {
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Row) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Row) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let r: Row = r.iter().map(|(j, c)| (*j, c.mul(&inv))).collect();
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &c, &r);
            }
        }
        let at = self.rows.partition_point(|row| *row.keys().next().unwrap() < p);
        self.rows.insert(at, r);
        true
    }
}

/// Reduced row echelon basis of the span of `rows`.
pub fn rref(rows: &[Row]) -> Vec<Row> {
    let mut s = Span::new();
    for r in rows {
        s.insert(r);
    }
    s.rows
}

/// Echelonized basis of the smallest subalgebra containing `gens`, found by
/// bracketing until the span stops growing.
pub fn subalgebra_closure(alg: &Algebra, gens: &[LieElement]) -> Result<Vec<LieElement>> {
    let mut span = Span::new();
    for g in gens {
        same_algebra(alg, g.algebra())?;
        span.insert(g.coeff_map());
    }
    loop {
        let current: Vec<LieElement> =
            span.rows().iter().map(|r| LieElement::from_map(alg, r.clone())).collect();
        let mut grew = false;
        for (a, x) in current.iter().enumerate() {
            for y in &current[a + 1..] {
                grew |= span.insert(x.bracket(y)?.coeff_map());
            }
        }
        if !grew {
            break;
        }
    }
    Ok(span.rows().iter().map(|r| LieElement::from_map(alg, r.clone())).collect())
}

/// Inverts a square matrix given by rows; `None` if singular.
pub fn invert(rows: &[Row], n: usize) -> Option<Vec<Row>> {
    // Gauss-Jordan on [M | I], identity columns offset by n
    let mut aug: Vec<Row> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.insert(n + i, Scalar::one());
            a
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| aug[r].get(&col).is_some_and(|c| !c.is_zero()))?;
        aug.swap(col, piv);
        let inv = aug[col][&col].inv().ok()?;
        aug[col] = aug[col].iter().map(|(j, c)| (*j, c.mul(&inv))).collect();
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col {
                if let Some(c) = row.get(&col).cloned() {
                    axpy(row, &c, &pivot_row);
                }
            }
        }
    }
    Some(
        aug.into_iter()
            .map(|r| r.into_iter().filter(|(j, _)| *j >= n).map(|(j, c)| (j - n, c)).collect())
            .collect(),
    )
}
