use proptest::prelude::*;
use twistforge::scalars::{GaussianRational, ParamSymbol, Reality, Scalar, SpecializationMap};

fn small_gauss() -> impl Strategy<Value = GaussianRational> {
    (-4i64..5, 1i64..4, -3i64..4).prop_map(|(a, d, b)| {
        &GaussianRational::from_ratio(a, d) + &GaussianRational::imag_ratio(b, d)
    })
}

fn param() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just(Scalar::param(ParamSymbol::new("alpha", Reality::Real))),
        Just(Scalar::param(ParamSymbol::new("beta1", Reality::Imaginary))),
        Just(Scalar::param(ParamSymbol::new("gamma", Reality::Real))),
    ]
}

// Small polynomials: sums of up to three terms c·p·q.
fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((small_gauss(), param(), param(), any::<bool>()), 1..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (c, p, q, two)| {
            let t = if two { p.mul(&q) } else { p };
            acc.add(&t.scale(&c))
        })
    })
}

// Rational functions with a nonzero denominator.
fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly(), any::<bool>()).prop_map(|(n, d, frac)| {
        if frac && !d.is_zero() {
            n.div(&d).unwrap()
        } else {
            n
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn canonical_form_idempotent(a in scalar(), b in scalar()) {
        let s = a.add(&b).mul(&a);
        prop_assert_eq!(s.canonicalize(), s.clone());
        prop_assert_eq!(s.canonicalize().canonicalize(), s.canonicalize());
    }

    #[test]
    fn conj_is_involutive_homomorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().unwrap().conj().unwrap(), a.clone());
        prop_assert_eq!(a.mul(&b).conj().unwrap(), a.conj().unwrap().mul(&b.conj().unwrap()));
        prop_assert_eq!(a.add(&b).conj().unwrap(), a.conj().unwrap().add(&b.conj().unwrap()));
    }
}

#[test]
fn specialization_of_parameter_ratio_matches_direct_arithmetic() {
    let p = |n: &str| Scalar::param(ParamSymbol::unrestricted(n));
    let s = p("gamma").mul(&p("alpha")).div(&p("beta1").mul(&p("beta1"))).unwrap();
    let (g, a, b) = (
        GaussianRational::from_ratio(5, 7),
        GaussianRational::from_ratio(2, 3),
        GaussianRational::from_ratio(3, 5),
    );
    let m = SpecializationMap::default()
        .with("gamma", g.clone())
        .and_then(|m| m.with("alpha", a.clone()))
        .and_then(|m| m.with("beta1", b.clone()))
        .unwrap();
    let h = m.specialize(&s).unwrap();
    let expected = &(&g * &a) * &(&b * &b).inv().unwrap();
    assert_eq!(h.valuation(), Some(0));
    assert_eq!(h.coeff(0), expected);
}

#[test]
fn conj_of_imaginary_parameter() {
    let b1 = Scalar::param(ParamSymbol::new("beta1", Reality::Imaginary));
    assert_eq!(b1.conj().unwrap(), b1.neg());
}
