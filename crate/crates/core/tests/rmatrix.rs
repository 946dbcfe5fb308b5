use proptest::prelude::*;
use twistforge::catalog::{all_entries, entry, lorentz_r, param, poincare_r, EntryId};
use twistforge::lie::builtin::{lorentz, poincare};
use twistforge::rmatrix::{
    check_decomposition_conditions, cybe_classify, decompose_abc, is_abelian_type,
    is_subordinated, schouten, star_reality_check, verify_jordanian_data, Bivector, CybeKind,
    JordanianData, Lifting, Trivector,
};
use twistforge::{Algebra, Error, LieElement, Reality, Scalar};

fn g(alg: &Algebra, name: &str) -> LieElement {
    LieElement::basis(alg, alg.index_of(name).unwrap())
}

fn p(name: &str) -> Scalar {
    param(name, Reality::Real)
}

fn wedge(alg: &Algebra, x: &str, y: &str) -> Bivector {
    Bivector::wedge(&g(alg, x), &g(alg, y)).unwrap()
}

// ------------------------------------------------------ adjoint action

#[test]
fn adjoint_action_examples() {
    let pa = poincare();
    // δ_{r'1}(h') = 0 for r'1 = αP+∧P- + ᾱP1∧P2
    let r = &wedge(&pa, "P+", "P-").scale(&p("alpha")) + &wedge(&pa, "P1", "P2").scale(&p("alphat"));
    assert!(r.adjoint_action(&g(&pa, "h'")).unwrap().is_zero());
    // a generator commuting with the support acts trivially
    assert!(wedge(&pa, "P1", "P2").adjoint_action(&g(&pa, "P+")).unwrap().is_zero());

    // δ_{e+∧h}(h) = [h,e+]∧h = e+∧h
    let l = lorentz();
    let r = wedge(&l, "e+", "h");
    assert_eq!(r.adjoint_action(&g(&l, "h")).unwrap(), r);
}

#[test]
fn mismatched_algebras_are_rejected() {
    let (l, pa) = (lorentz(), poincare());
    let r = wedge(&l, "e+", "h");
    assert!(matches!(r.adjoint_action(&g(&pa, "P1")), Err(Error::AlgebraMismatch(..))));
    assert!(schouten(&r, &wedge(&pa, "P1", "P2")).is_err());
}

fn generator(alg: Algebra) -> impl Strategy<Value = LieElement> {
    let n = alg.dim();
    (0..n).prop_map(move |j| LieElement::basis(&alg, j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_action_is_a_representation(
        x in generator(poincare()),
        y in generator(poincare()),
        k in 1u8..=21,
    ) {
        let r = poincare_r(k).unwrap();
        let xy = x.bracket(&y).unwrap();
        let lhs = r.adjoint_action(&xy).unwrap();
        let rhs = r
            .adjoint_action(&y).unwrap()
            .adjoint_action(&x).unwrap()
            .try_sub(&r.adjoint_action(&x).unwrap().adjoint_action(&y).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// ------------------------------------------------------------ schouten

#[test]
fn schouten_examples() {
    let pa = poincare();
    let r = wedge(&pa, "P1", "P2").scale(&p("alpha"));
    assert!(schouten(&r, &r).unwrap().is_zero());

    let r6 = poincare_r(6).unwrap();
    let s = schouten(&r6, &r6).unwrap();
    assert!(!s.is_zero());
    assert!(s.is_ad_invariant());

    let t12 = entry(EntryId::Tilde12).unwrap();
    let d = decompose_abc(&t12.r).unwrap();
    assert!(!schouten(&d.a, &d.b).unwrap().is_zero());
}

#[test]
fn schouten_ignores_the_wedge_representation() {
    // (x + y)∧y and x∧y are the same bivector
    let l = lorentz();
    let (x, y) = (g(&l, "e+"), g(&l, "h"));
    let shifted = Bivector::wedge(&x.try_add(&y).unwrap(), &y).unwrap();
    let plain = Bivector::wedge(&x, &y).unwrap();
    assert_eq!(shifted, plain);
    let r = &plain + &wedge(&l, "e'+", "h'");
    let r2 = &shifted + &Bivector::wedge(&g(&l, "e'+").scale(&Scalar::from_int(2)), &g(&l, "h'").scale(&Scalar::from_ratio(1, 2))).unwrap();
    assert_eq!(schouten(&r, &r).unwrap(), schouten(&r2, &r2).unwrap());
}

#[test]
fn ad_invariance_examples() {
    let l = lorentz();
    assert!(Trivector::zero(&l).is_ad_invariant());
    let r3 = lorentz_r(3, Reality::Real).unwrap();
    let s = schouten(&r3, &r3).unwrap();
    assert!(!s.is_zero() && s.is_ad_invariant());
    let t = Trivector::wedge(&g(&l, "e+"), &g(&l, "h"), &g(&l, "h'")).unwrap();
    assert!(!t.is_ad_invariant());
}

// ------------------------------------------------------- classification

#[test]
fn classification_examples() {
    assert_eq!(cybe_classify(&lorentz_r(1, Reality::Real).unwrap()).unwrap().kind, CybeKind::Homogeneous);
    assert_eq!(cybe_classify(&lorentz_r(3, Reality::Real).unwrap()).unwrap().kind, CybeKind::Modified);
    let t12 = entry(EntryId::Tilde12).unwrap();
    assert_eq!(cybe_classify(&t12.r).unwrap().kind, CybeKind::NotCYBE);
    let v = cybe_classify(&poincare_r(20).unwrap()).unwrap();
    assert!(v.omega.is_zero() && v.invariant);
}

// -------------------------------------------------------- decomposition

#[test]
fn decomposition_examples() {
    let pa = poincare();
    let r2 = poincare_r(2).unwrap();
    let d = decompose_abc(&r2).unwrap();
    assert!(d.a.is_zero());
    let (bp, _) = twistforge::catalog::b_helpers();
    let b = &bp.scale(&p("beta1")) + &wedge(&pa, "P+", "h'").scale(&p("beta2"));
    assert_eq!(d.b, b);
    assert_eq!(d.c, wedge(&pa, "e'+", "e+").scale(&p("gamma")));
    assert_eq!(&(&d.a + &d.b) + &d.c, r2);

    let d21 = decompose_abc(&poincare_r(21).unwrap()).unwrap();
    assert!(d21.b.is_zero() && d21.c.is_zero());

    let z = decompose_abc(&Bivector::zero(&pa)).unwrap();
    assert!(z.a.is_zero() && z.b.is_zero() && z.c.is_zero());

    assert!(matches!(decompose_abc(&lorentz_r(1, Reality::Real).unwrap()), Err(Error::NotPoincare(_))));
}

#[test]
fn decomposition_condition_examples() {
    let rep = check_decomposition_conditions(&poincare_r(20).unwrap()).unwrap();
    assert!(rep.all_pass() && rep.omega.is_zero() && rep.ab.is_zero());

    let rep = check_decomposition_conditions(&poincare_r(9).unwrap()).unwrap();
    assert!(rep.all_pass());

    let rep = check_decomposition_conditions(&entry(EntryId::Tilde12).unwrap().r).unwrap();
    assert!(!rep.ab_vanishes);
    assert_eq!(rep.verdicts().iter().filter(|(_, ok)| !ok).count(), 1);
}

// --------------------------------------------------------- subordination

#[test]
fn subordination_examples() {
    let e1 = entry(EntryId::Poincare(1)).unwrap();
    assert!(is_subordinated(&e1.pieces[0].r, &e1.pieces[1].r).unwrap());

    let e17 = entry(EntryId::Poincare(17)).unwrap();
    assert!(is_subordinated(&e17.pieces[0].r, &e17.pieces[1].r).unwrap());
    assert!(is_subordinated(&e17.pieces[1].r, &e17.pieces[0].r).unwrap());

    let l = lorentz();
    assert!(!is_subordinated(&wedge(&l, "e+", "h"), &wedge(&l, "e-", "h")).unwrap());
}

#[test]
fn subordinated_catalog_pairs_sum_to_r_matrices() {
    let mut pairs = 0;
    for e in all_entries() {
        for (i, a) in e.pieces.iter().enumerate() {
            for (j, b) in e.pieces.iter().enumerate() {
                if i == j {
                    continue;
                }
                let solutions = [&a.r, &b.r]
                    .iter()
                    .all(|r| cybe_classify(r).unwrap().kind != CybeKind::NotCYBE);
                if solutions && is_subordinated(&a.r, &b.r).unwrap() {
                    pairs += 1;
                    let k = cybe_classify(&(&a.r + &b.r)).unwrap().kind;
                    assert_ne!(k, CybeKind::NotCYBE, "{}: {} + {}", e.id, a.name, b.name);
                }
            }
        }
    }
    assert!(pairs > 20);
}

// ------------------------------------------------------- type recognition

fn case2_data(t1: Scalar) -> JordanianData {
    let pa = poincare();
    JordanianData {
        x0: g(&pa, "h"),
        y0: g(&pa, "P+"),
        pairs: vec![
            (g(&pa, "e+"), g(&pa, "P1"), t1),
            (g(&pa, "e'+").scale(&Scalar::from_int(-1)), g(&pa, "P2"), Scalar::zero()),
        ],
        xi: p("beta1"),
    }
}

#[test]
fn jordanian_data_examples() {
    let l = lorentz();
    let d = JordanianData { x0: g(&l, "h"), y0: g(&l, "e+"), pairs: vec![], xi: p("alpha") };
    let r1 = lorentz_r(1, Reality::Real).unwrap();
    assert!(verify_jordanian_data(&d, &r1).unwrap().passed());

    let (bp, _) = twistforge::catalog::b_helpers();
    let claimed = bp.scale(&p("beta1"));
    assert!(verify_jordanian_data(&case2_data(Scalar::zero()), &claimed).unwrap().passed());

    let rep = verify_jordanian_data(&case2_data(Scalar::one()), &claimed).unwrap();
    assert!(rep.first().unwrap().starts_with("[x0, y_i] = t_i y_i"), "{:?}", rep.first());
}

#[test]
fn abelian_type_examples() {
    let e4 = entry(EntryId::Poincare(4)).unwrap();
    let r2 = e4.pieces.iter().find(|x| x.name == "r''").unwrap();
    assert!(is_abelian_type(&r2.r).unwrap());
    assert!(is_abelian_type(&poincare_r(21).unwrap()).unwrap());
    let e2 = entry(EntryId::Poincare(2)).unwrap();
    assert!(!is_abelian_type(&e2.pieces[0].r).unwrap());
}

// --------------------------------------------------------------- reality

#[test]
fn reality_examples() {
    let r1i = lorentz_r(1, Reality::Imaginary).unwrap();
    assert!(star_reality_check(&r1i, Lifting::Direct).unwrap());
    let r2 = lorentz_r(2, Reality::Real).unwrap();
    assert!(star_reality_check(&r2, Lifting::Flipped).unwrap());
    let r1 = lorentz_r(1, Reality::Real).unwrap();
    assert!(!star_reality_check(&r1, Lifting::Direct).unwrap());
}

#[test]
fn reality_needs_the_matching_lifting() {
    for j in 1..=4 {
        let im = lorentz_r(j, Reality::Imaginary).unwrap();
        let re = lorentz_r(j, Reality::Real).unwrap();
        assert!(star_reality_check(&im, Lifting::Direct).unwrap(), "L{j}");
        assert!(star_reality_check(&re, Lifting::Flipped).unwrap(), "L{j}");
        assert!(!star_reality_check(&im, Lifting::Flipped).unwrap(), "L{j}");
        assert!(!star_reality_check(&re, Lifting::Direct).unwrap(), "L{j}");
    }
}

#[test]
fn reality_needs_a_star() {
    let pa = twistforge::lie::LieAlgebraBuilder::new("plain", &["x", "y"]).build().unwrap();
    let r = wedge(&pa, "x", "y");
    assert!(star_reality_check(&r, Lifting::Direct).is_err());
}
