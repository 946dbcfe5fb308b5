use proptest::prelude::*;
use twistforge::catalog::{all_entries, entry, lorentz_r, EntryId};
use twistforge::lie::builtin::{complex_lorentz, lorentz, poincare};
use twistforge::rmatrix::schouten;
use twistforge::uea::{
    antipode, coproduct, counit, cybe_lhs_tensor, trivector_tensor, Monomial,
};
use twistforge::{Algebra, GaussianRational as G, Reality, Scalar, TensorElement, UEAElement};

type E = UEAElement<G>;

#[path = "support/free_oracle.rs"]
mod free_oracle;
use free_oracle::{as_words, monomials, reduce_randomly};

fn gen(alg: &Algebra, name: &str) -> E {
    E::generator(alg, alg.index_of(name).unwrap())
}

fn word(alg: &Algebra, names: &[&str]) -> E {
    let w: Vec<usize> = names.iter().map(|n| alg.index_of(n).unwrap()).collect();
    E::from_word(alg, &w, G::one())
}

fn mul(a: &E, b: &E) -> E {
    a.try_mul(b).unwrap()
}

fn add(a: &E, b: &E) -> E {
    a.try_add(b).unwrap()
}

fn c(n: i64) -> G {
    G::from_int(n)
}

#[test]
fn normal_ordering_examples() {
    let l = lorentz();
    // e- e+ = e+ e- − 2h
    let lhs = mul(&gen(&l, "e-"), &gen(&l, "e+"));
    let rhs = add(&word(&l, &["e+", "e-"]), &gen(&l, "h").scale(&c(-2)));
    assert_eq!(lhs, rhs);
    // with e+ before h in the basis order: h e+ = e+ h + e+
    let lhs = mul(&gen(&l, "h"), &gen(&l, "e+"));
    let rhs = add(&word(&l, &["e+", "h"]), &gen(&l, "e+"));
    assert_eq!(lhs, rhs);
    let p = poincare();
    assert_eq!(mul(&gen(&p, "P1"), &gen(&p, "P+")), word(&p, &["P+", "P1"]));
}

#[test]
fn unit_and_slotwise_products() {
    let l = lorentz();
    let x = add(&word(&l, &["e+", "h"]), &gen(&l, "e'-").scale(&c(3)));
    assert_eq!(mul(&E::one(&l), &x), x);
    assert_eq!(mul(&x, &E::one(&l)), x);
    let one = E::one(&l);
    let a = TensorElement::pure(&[&gen(&l, "e+"), &one]).unwrap();
    let b = TensorElement::pure(&[&one, &gen(&l, "e-")]).unwrap();
    let ab = TensorElement::pure(&[&gen(&l, "e+"), &gen(&l, "e-")]).unwrap();
    assert_eq!(a.try_mul(&b).unwrap(), ab);
}

#[test]
fn coproduct_examples() {
    let l = lorentz();
    let one = E::one(&l);
    let e = gen(&l, "e+");
    let want = TensorElement::pure(&[&e, &one])
        .unwrap()
        .try_add(&TensorElement::pure(&[&one, &e]).unwrap())
        .unwrap();
    assert_eq!(coproduct(&e), want);
    let h = gen(&l, "h");
    let h2 = mul(&h, &h);
    let mut want = TensorElement::pure(&[&h2, &one]).unwrap();
    want.add_assign(&TensorElement::pure(&[&h, &h]).unwrap().scale(&c(2))).unwrap();
    want.add_assign(&TensorElement::pure(&[&one, &h2]).unwrap()).unwrap();
    assert_eq!(coproduct(&h2), want);
    let cl = complex_lorentz();
    let one = E::one(&cl);
    for name in ["H1", "H2"] {
        let x = gen(&cl, name);
        let want = TensorElement::pure(&[&x, &one])
            .unwrap()
            .try_add(&TensorElement::pure(&[&one, &x]).unwrap())
            .unwrap();
        assert_eq!(coproduct(&x), want);
    }
}

#[test]
fn counit_and_antipode_examples() {
    let l = lorentz();
    let x = add(&E::one(&l), &word(&l, &["h", "e+"]).scale(&c(3)));
    assert_eq!(counit(&x), G::one());
    // S(h e+) = S(e+) S(h) = e+ h
    assert_eq!(antipode(&word(&l, &["h", "e+"])), word(&l, &["e+", "h"]));
    assert_eq!(antipode(&E::one(&l)), E::one(&l));
}

#[test]
fn cybe_lhs_examples() {
    let p20 = entry(EntryId::Poincare(20)).unwrap();
    assert!(cybe_lhs_tensor(&p20.r).unwrap().is_zero());
    let r1 = lorentz_r(1, Reality::Real).unwrap();
    assert!(cybe_lhs_tensor(&r1).unwrap().is_zero());
    let r4 = lorentz_r(4, Reality::Real).unwrap();
    let lhs = cybe_lhs_tensor(&r4).unwrap();
    assert!(!lhs.is_zero());
    let half = trivector_tensor(&schouten(&r4, &r4).unwrap()).scale(&Scalar::from_ratio(1, 2));
    assert_eq!(lhs, half);
}

#[test]
fn cybe_lhs_agrees_with_schouten_on_catalog() {
    for e in all_entries() {
        let lhs = cybe_lhs_tensor(&e.r).unwrap();
        let omega = schouten(&e.r, &e.r).unwrap();
        let half = trivector_tensor(&omega).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(lhs, half, "{}", e.id);
        assert_eq!(lhs.is_zero(), omega.is_zero(), "{}", e.id);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_is_confluent(
        w in prop::collection::vec(0usize..10, 0..=5),
        choices in prop::collection::vec(0usize..16, 1..32),
    ) {
        let p = poincare();
        let lib = E::from_word(&p, &w, G::one());
        prop_assert_eq!(as_words(&lib), reduce_randomly(&p, w.clone(), &choices));
    }

    #[test]
    fn lorentz_rewriting_is_confluent(
        w in prop::collection::vec(0usize..6, 0..=5),
        choices in prop::collection::vec(0usize..16, 1..32),
    ) {
        let l = lorentz();
        let lib = E::from_word(&l, &w, G::one());
        prop_assert_eq!(as_words(&lib), reduce_randomly(&l, w.clone(), &choices));
    }
}

#[test]
fn nilpotent_products_match_free_reduction() {
    let p = poincare();
    let names = ["P+", "P-", "P1", "P2", "e+", "e'+"];
    let gens: Vec<usize> = names.iter().map(|n| p.index_of(n).unwrap()).collect();
    // the span is a subalgebra
    for &a in &gens {
        for &b in &gens {
            for (l, _) in p.bracket_basis(a, b) {
                assert!(gens.contains(l));
            }
        }
    }
    let monos = monomials(&gens, 4);
    let mut count = 0;
    for a in &monos {
        for b in &monos {
            if a.len() + b.len() > 4 {
                continue;
            }
            let x = E::from_word(&p, a, G::one());
            let y = E::from_word(&p, b, G::one());
            let mut w = a.clone();
            w.extend_from_slice(b);
            // leftmost-first reduction is a fixed strategy of the oracle
            let want = reduce_randomly(&p, w, &[0]);
            assert_eq!(as_words(&mul(&x, &y)), want, "{a:?} * {b:?}");
            count += 1;
        }
    }
    assert!(count > 1000);
}

fn element_strategy(dim: usize, max_deg: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..dim, 0..=max_deg), -3i64..=3), 1..4)
}

fn build(alg: &Algebra, spec: &[(Vec<usize>, i64)]) -> E {
    let mut x = E::zero(alg);
    for (w, k) in spec {
        x = add(&x, &E::from_word(alg, w, c(*k)));
    }
    x
}

fn eps_tensor(t: &TensorElement<G>, slot: usize) -> E {
    t.counit_at(slot).unwrap().to_element().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coassociative(spec in element_strategy(10, 3)) {
        let p = poincare();
        let x = build(&p, &spec);
        let d = coproduct(&x);
        prop_assert_eq!(d.coproduct_at(0).unwrap(), d.coproduct_at(1).unwrap());
    }

    #[test]
    fn counit_axioms(spec in element_strategy(6, 3)) {
        let l = lorentz();
        let x = build(&l, &spec);
        let d = coproduct(&x);
        prop_assert_eq!(eps_tensor(&d, 0), x.clone());
        prop_assert_eq!(eps_tensor(&d, 1), x);
    }

    #[test]
    fn coproduct_is_multiplicative(a in element_strategy(10, 2), b in element_strategy(10, 2)) {
        let p = poincare();
        let (x, y) = (build(&p, &a), build(&p, &b));
        prop_assert_eq!(coproduct(&mul(&x, &y)), coproduct(&x).try_mul(&coproduct(&y)).unwrap());
    }

    #[test]
    fn antipode_axiom_on_quadratics(a in 0usize..6, b in 0usize..6, k in -3i64..=3) {
        let l = lorentz();
        let x = add(&E::from_word(&l, &[a, b], c(k)), &E::generator(&l, a));
        let d = coproduct(&x);
        let left = d.antipode_at(0).unwrap().multiply_slots(0).unwrap().to_element().unwrap();
        let right = d.antipode_at(1).unwrap().multiply_slots(0).unwrap().to_element().unwrap();
        let unit = E::constant(&l, counit(&x));
        prop_assert_eq!(left, unit.clone());
        prop_assert_eq!(right, unit);
    }

    #[test]
    fn antipode_is_anti_multiplicative(a in element_strategy(6, 2), b in element_strategy(6, 2)) {
        let l = lorentz();
        let (x, y) = (build(&l, &a), build(&l, &b));
        prop_assert_eq!(antipode(&mul(&x, &y)), mul(&antipode(&y), &antipode(&x)));
    }
}

#[test]
fn antipode_axiom_on_generators() {
    for alg in [lorentz(), poincare(), complex_lorentz()] {
        for j in 0..alg.dim() {
            let d = coproduct(&E::generator(&alg, j));
            let s = d.antipode_at(0).unwrap().multiply_slots(0).unwrap();
            assert!(s.is_zero());
        }
    }
}

#[test]
fn monomial_exponents_round_trip() {
    let m = Monomial::from_exponents(&[2, 0, 1]);
    assert_eq!(m.exponents(), vec![(0, 2), (2, 1)]);
    assert_eq!(m.degree(), 3);
}
