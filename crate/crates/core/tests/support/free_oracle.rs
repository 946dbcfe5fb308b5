//! Independent reference for PBW products: words are reduced by swapping
//! adjacent out-of-order pairs with a caller-chosen strategy, without any
//! memoization or the library's left-multiplication recursion.

use std::collections::BTreeMap;

use twistforge::{Algebra, GaussianRational as G, UEAElement};

/// Linear combinations of words, reduced by swapping an out-of-order
/// adjacent pair chosen from `choices`; independent of the library's
/// rewriting order.
pub fn reduce_randomly(alg: &Algebra, start: Vec<usize>, choices: &[usize]) -> BTreeMap<Vec<usize>, G> {
    let mut done: BTreeMap<Vec<usize>, G> = BTreeMap::new();
    let mut todo: Vec<(Vec<usize>, G)> = vec![(start, G::one())];
    let mut step = 0usize;
    while let Some((w, k)) = todo.pop() {
        let bad: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if bad.is_empty() {
            let e = done.entry(w).or_default();
            *e += &k;
            continue;
        }
        let i = bad[choices.get(step % choices.len().max(1)).copied().unwrap_or(0) % bad.len()];
        step += 1;
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        todo.push((swapped, k.clone()));
        for (l, s) in alg.bracket_basis(w[i], w[i + 1]) {
            let mut nw = w[..i].to_vec();
            nw.push(*l);
            nw.extend_from_slice(&w[i + 2..]);
            todo.push((nw, &k * s));
        }
    }
    done.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn as_words(x: &UEAElement<G>) -> BTreeMap<Vec<usize>, G> {
    x.terms().map(|(m, c)| (m.word().iter().map(|&g| g as usize).collect(), c.clone())).collect()
}

/// Every monomial of degree ≤ `d` in the given generators.
pub fn monomials(gens: &[usize], d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for &g in gens {
                if w.last().is_none_or(|&l| l <= g) {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
