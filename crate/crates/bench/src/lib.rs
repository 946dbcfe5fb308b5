//! Shared fixtures for the benchmark harness.

use twistforge::catalog::{entry, EntryId};
use twistforge::lie::builtin::poincare;
use twistforge::twist::{build_entry_twist, Twist};
use twistforge::{GaussianRational as G, SpecializationMap, UEAElement};

/// Two out-of-order Poincare words of degree four whose product needs many
/// rewriting steps.
pub fn pbw_operands() -> (UEAElement<G>, UEAElement<G>) {
    let p = poincare();
    let word = |names: &[&str]| -> UEAElement<G> {
        let w: Vec<usize> = names.iter().map(|n| p.index_of(n).unwrap()).collect();
        UEAElement::from_word(&p, &w, G::one())
    };
    (word(&["e'-", "h", "P2", "e+"]), word(&["P-", "e-", "h'", "P+"]))
}

/// A catalog twist at the default specialization.
pub fn twist(id: EntryId, order: usize) -> Twist {
    let e = entry(id).expect("catalog entry");
    build_entry_twist(&e, &SpecializationMap::default(), order).expect("twist builds")
}
