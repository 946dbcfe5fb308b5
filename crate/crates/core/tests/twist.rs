use proptest::prelude::*;
use twistforge::catalog::{
    abelian_factor, all_entries, entry, jordanian_factors, EntryId, FactorKind, FactorRecipe,
    Series,
};
use twistforge::lie::builtin::{lorentz, poincare};
use twistforge::lie::LieAlgebraBuilder;
use twistforge::rmatrix::{Bivector, JordanianData};
use twistforge::twist::{
    binomial_jordanian, build_entry_twist, build_twist, classical_limit, cocycle_check,
    cocycle_check_series, constant_series, counit_check, factors_commute, inverse_check,
    local_r_symmetry_check, omega_conjugate, specialize_tensor, twisted_antipode_axiom,
    twisted_coproduct, twisted_coproduct_series, u_element, GradedSeries, Symmetry, Twist,
};
use twistforge::uea::{bivector_tensor, coproduct};
use twistforge::{
    Algebra, Error, GaussianRational as G, LieElement, Scalar, SpecializationMap, TensorElement,
    UEAElement,
};

type E = UEAElement<G>;

fn q(n: i64, d: i64) -> G {
    G::from_ratio(n, d)
}

fn gen(alg: &Algebra, name: &str) -> E {
    E::generator(alg, alg.index_of(name).unwrap())
}

fn word(alg: &Algebra, names: &[&str]) -> E {
    let w: Vec<usize> = names.iter().map(|n| alg.index_of(n).unwrap()).collect();
    E::from_word(alg, &w, G::one())
}

fn one(alg: &Algebra) -> E {
    E::one(alg)
}

fn tensor(a: &E, b: &E) -> TensorElement<G> {
    TensorElement::pure(&[a, b]).unwrap()
}

fn lie(alg: &Algebra, name: &str) -> LieElement {
    LieElement::basis(alg, alg.index_of(name).unwrap())
}

fn param(name: &str) -> Scalar {
    twistforge::catalog::param(name, twistforge::Reality::Real)
}

fn defaults() -> SpecializationMap {
    SpecializationMap::default()
}

/// `exp(A)` by the plain power sum `Σ A^k/k!`, for a rank-2 series `A` of
/// valuation ≥ 1.
fn exp_by_powers(a: &GradedSeries) -> GradedSeries {
    let n = a.order();
    let mut out = GradedSeries::one(a.algebra(), a.rank(), n);
    let mut pow = out.clone();
    let mut fact = G::one();
    for k in 1..=n {
        pow = pow.try_mul(a).unwrap();
        fact = &fact * &G::from_int(k as i64);
        out = out.try_add(&pow.scale(&fact.inv().unwrap())).unwrap();
    }
    out
}

/// Rank-2 series `ħ^d · t`.
fn at(t: TensorElement<G>, d: usize, n: usize) -> GradedSeries {
    GradedSeries::monomial(t, d, n)
}

/// `σ = ½ log(1 + ħ c y)` with the Maclaurin coefficients written out.
fn sigma_parts(alg: &Algebra, y: &str, c: &G, n: usize) -> Vec<E> {
    let mut parts = vec![E::zero(alg)];
    for d in 1..=n {
        let sign = if d % 2 == 1 { 1 } else { -1 };
        let k = &c.pow(d as u32) * &q(sign, 2 * d as i64);
        parts.push(gen(alg, y).pow(d as u32).unwrap().scale(&k));
    }
    parts
}

/// `exp(k·x⊗σ)` where `σ` comes from [`sigma_parts`].
fn x_tensor_sigma(alg: &Algebra, x: &E, k: &G, sigma: &[E], n: usize) -> GradedSeries {
    let mut a = GradedSeries::zero(alg, 2, n);
    for (d, s) in sigma.iter().enumerate().take(n + 1) {
        a = a.try_add(&at(tensor(x, s).scale(k), d, n)).unwrap();
    }
    exp_by_powers(&a)
}

fn l1(n: usize) -> Twist {
    build_entry_twist(&entry(EntryId::Lorentz(1)).unwrap(), &defaults(), n).unwrap()
}

fn poincare_twist(k: u8, n: usize) -> Twist {
    build_entry_twist(&entry(EntryId::Poincare(k)).unwrap(), &defaults(), n).unwrap()
}

// ---------------------------------------------------------------- series

#[test]
fn exp_of_zero_is_one() {
    let l = lorentz();
    for rank in [1, 2, 3] {
        let z = GradedSeries::zero(&l, rank, 4);
        assert_eq!(z.exp().unwrap(), GradedSeries::one(&l, rank, 4));
    }
}

#[test]
fn valuation_zero_arguments_are_rejected() {
    let l = lorentz();
    let s = GradedSeries::one(&l, 1, 3);
    for r in [s.exp(), s.log1p(), s.sqrt1p(), s.arctan(), s.geom_inv()] {
        assert!(matches!(r, Err(Error::SeriesValuation(_))));
    }
}

#[test]
fn sqrt1p_squares_back_to_u() {
    // u = exp(−α h e+) with α ↦ ħ·2/3
    let l = lorentz();
    let n = 5;
    let x = word(&l, &["h", "e+"]).scale(&q(-2, 3));
    let s = GradedSeries::from_elements(&l, &[E::zero(&l), x], n);
    let u = s.exp().unwrap();
    let w = u.try_sub(&GradedSeries::one(&l, 1, n)).unwrap().sqrt1p().unwrap();
    assert_eq!(w.try_mul(&w).unwrap(), u);
    // ω itself is exp(−½ α h e+)
    assert_eq!(w, s.scale(&q(1, 2)).exp().unwrap());
}

#[test]
fn arctan_and_geom_inv_on_a_commuting_element() {
    // on a single generator both reduce to scalar Maclaurin series
    let p = poincare();
    let n = 5;
    let s = GradedSeries::from_elements(&p, &[E::zero(&p), gen(&p, "P1")], n);
    let one1 = GradedSeries::one(&p, 1, n);
    assert_eq!(s.geom_inv().unwrap().try_mul(&one1.try_add(&s).unwrap()).unwrap(), one1);
    let at = s.arctan().unwrap();
    let p1 = gen(&p, "P1");
    let expect = [
        E::zero(&p),
        p1.clone(),
        E::zero(&p),
        p1.pow(3).unwrap().scale(&q(-1, 3)),
        E::zero(&p),
        p1.pow(5).unwrap().scale(&q(1, 5)),
    ];
    assert_eq!(at, GradedSeries::from_elements(&p, &expect, n));
}

fn small_element(alg: &Algebra, coeffs: &[i64]) -> E {
    let mut x = E::zero(alg);
    for (j, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            x = x.try_add(&E::generator(alg, j).scale(&G::from_int(c))).unwrap();
        }
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn log1p_inverts_exp(
        c1 in proptest::collection::vec(-2i64..=2, 6),
        c2 in proptest::collection::vec(-2i64..=2, 6),
    ) {
        let l = lorentz();
        let n = 3;
        let s = GradedSeries::from_elements(
            &l,
            &[E::zero(&l), small_element(&l, &c1), small_element(&l, &c2)],
            n,
        );
        let e = s.exp().unwrap();
        let back = e.try_sub(&GradedSeries::one(&l, 1, n)).unwrap().log1p().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn twisted_coproduct_is_multiplicative(a in 0usize..6, b in 0usize..6) {
        let l = lorentz();
        let f = l1(3);
        let (x, y) = (E::generator(&l, a), E::generator(&l, b));
        let dxy = twisted_coproduct(&f, &x.try_mul(&y).unwrap()).unwrap();
        let dx = twisted_coproduct(&f, &x).unwrap();
        let dy = twisted_coproduct(&f, &y).unwrap();
        prop_assert_eq!(dxy, dx.try_mul(&dy).unwrap());
    }
}

// ---------------------------------------------------------- construction

#[test]
fn abelian_recipe_is_half_the_reversed_wedge() {
    // r_A = α(P1∧P2 + P+∧P-) = Σ y∧x gives exp(½ Σ x∧y)
    let p = poincare();
    let a = param("alpha");
    let r = Bivector::wedge(&lie(&p, "P1"), &lie(&p, "P2"))
        .unwrap()
        .try_add(&Bivector::wedge(&lie(&p, "P+"), &lie(&p, "P-")).unwrap())
        .unwrap()
        .scale(&a);
    let n = 4;
    let f = build_twist(&p, &[abelian_factor("F", &r)], &defaults(), n).unwrap();
    let wedge = |x: &str, y: &str| {
        tensor(&gen(&p, x), &gen(&p, y)).try_sub(&tensor(&gen(&p, y), &gen(&p, x))).unwrap()
    };
    let half_alpha = q(1, 3);
    let arg = wedge("P2", "P1").try_add(&wedge("P-", "P+")).unwrap().scale(&half_alpha);
    assert_eq!(f.value, exp_by_powers(&at(arg, 1, n)));

    // degree-1 part is ½·(−r)
    let r1 = specialize_tensor(&bivector_tensor(&r), &defaults(), 1).unwrap();
    assert_eq!(*f.value.part(1), r1.scale(&q(-1, 2)));
    assert_eq!(*f.value.part(0), TensorElement::one(&p, 2));
}

#[test]
fn lorentz_jordanian_is_exp_of_h_tensor_sigma() {
    let l = lorentz();
    let n = 4;
    let f = l1(n);
    let sigma = sigma_parts(&l, "e+", &q(2, 3), n);
    let expect = x_tensor_sigma(&l, &gen(&l, "h"), &G::from_int(2), &sigma, n);
    assert_eq!(f.value, expect);
}

#[test]
fn case_two_jordanian_factors() {
    // exp(β1(e+⊗P1 − e'+⊗P2))·exp(2h⊗σ+), σ+ = ½ log(1 + β1 P+)
    let p = poincare();
    let n = 3;
    let f = poincare_twist(2, n);
    let labels: Vec<&str> = f.factors.iter().map(|x| x.label.as_str()).collect();
    assert_eq!(labels, ["F'''", "F''", "F'_1", "F'_0"]);
    let b1 = q(3, 5);
    let pair = tensor(&gen(&p, "e+"), &gen(&p, "P1"))
        .try_sub(&tensor(&gen(&p, "e'+"), &gen(&p, "P2")))
        .unwrap()
        .scale(&b1);
    let first = exp_by_powers(&at(pair, 1, n));
    let sigma = sigma_parts(&p, "P+", &b1, n);
    let second = x_tensor_sigma(&p, &gen(&p, "h"), &G::from_int(2), &sigma, n);
    let built = f.factors[2].value.try_mul(&f.factors[3].value).unwrap();
    assert_eq!(built, first.try_mul(&second).unwrap());
}

#[test]
fn negative_degree_coefficients_are_absorbed() {
    // Lorentz r2 carries iβ/α²; its factor still has valuation ≥ 1
    let f = build_entry_twist(&entry(EntryId::Lorentz(2)).unwrap(), &defaults(), 3).unwrap();
    assert_eq!(f.factors[0].argument.valuation(), Some(1));
    assert!(cocycle_check(&f).unwrap().passed());
}

#[test]
fn valuation_failures_name_the_factor() {
    let l = lorentz();
    let n = 3;
    // constant coefficient: valuation 0
    let flat = FactorRecipe::new("flat", FactorKind::Series).tensor(
        Scalar::one(),
        Series::lie(lie(&l, "h")),
        Series::lie(lie(&l, "e+")),
    );
    match build_twist(&l, &[flat], &defaults(), n) {
        Err(Error::Valuation { factor, valuation }) => {
            assert_eq!(factor, "flat");
            assert_eq!(valuation, 0);
        }
        other => panic!("expected a valuation error, got {other:?}"),
    }
    // 1/α times a degree-0 argument: valuation −1
    let a = param("alpha");
    let neg = FactorRecipe::new("neg", FactorKind::Series).tensor(
        Scalar::one().div(&a).unwrap(),
        Series::lie(lie(&l, "h")),
        Series::lie(lie(&l, "e+")),
    );
    match build_twist(&l, &[neg], &defaults(), n) {
        Err(Error::Valuation { factor, valuation }) => {
            assert_eq!(factor, "neg");
            assert!(valuation < 0);
        }
        other => panic!("expected a valuation error, got {other:?}"),
    }
}

// --------------------------------------------------------------- cocycle

#[test]
fn abelian_momentum_twist_passes_at_any_order() {
    for n in [1, 3, 6] {
        let f = poincare_twist(20, n);
        let c = cocycle_check(&f).unwrap();
        assert!(c.passed(), "order {n}: {:?}", c.witness);
        assert_eq!(c.order, n);
    }
}

#[test]
fn lorentz_jordanian_passes_at_order_four() {
    assert!(cocycle_check(&l1(4)).unwrap().passed());
}

#[test]
fn h_tensor_e_plus_is_not_a_twist() {
    let l = lorentz();
    let n = 3;
    let f = exp_by_powers(&at(tensor(&gen(&l, "h"), &gen(&l, "e+")), 1, n));
    let c = cocycle_check_series(&f).unwrap();
    assert_eq!(c.first_failure, Some(2));
    assert!(c.witness.is_some());
    // the unital condition still holds, so only the cocycle rejects it
    assert!(counit_check(&f).unwrap());
}

#[test]
fn poincare_cases_pass_at_order_four() {
    for k in [2, 17] {
        let c = cocycle_check(&poincare_twist(k, 4)).unwrap();
        assert!(c.passed(), "case {k}: {:?}", c.witness);
    }
}

#[test]
fn jordanian_factor_needs_the_factor_two() {
    // exp((h + α2/β1 P1)⊗σ+) without the 2 is not a twist
    let p = poincare();
    let (a1, a2, b1) = (param("alpha1"), param("alpha2"), param("beta1"));
    let x0 = lie(&p, "h").try_add(&lie(&p, "P1").scale(&a2.div(&b1).unwrap())).unwrap();
    let sigma = Series::sigma(lie(&p, "P+").scale(&b1));
    let literal = FactorRecipe::new("F'", FactorKind::Jordanian).tensor(
        Scalar::one(),
        Series::lie(x0),
        sigma,
    );
    let abelian = FactorRecipe::new("F''", FactorKind::Abelian).wedge(
        a1,
        Series::lie(lie(&p, "P2")),
        Series::lie(lie(&p, "P1")),
    );
    let f = build_twist(&p, &[abelian, literal], &defaults(), 3).unwrap();
    let c = cocycle_check(&f).unwrap();
    assert_eq!(c.first_failure, Some(2));
}

fn synthetic(t: &G) -> Algebra {
    let one_minus_t = &G::one() - t;
    LieAlgebraBuilder::new("jordanian-test", &["x0", "y0", "x1", "y1"])
        .bracket("x0", "y0", &[("y0", G::one())])
        .unwrap()
        .bracket("x0", "x1", &[("x1", one_minus_t)])
        .unwrap()
        .bracket("x0", "y1", &[("y1", t.clone())])
        .unwrap()
        .bracket("x1", "y1", &[("y0", G::one())])
        .unwrap()
        .build()
        .unwrap()
}

#[test]
fn general_jordanian_twist_with_dressing() {
    let t = q(1, 3);
    let alg = synthetic(&t);
    let xi = param("xi");
    let d = JordanianData {
        x0: lie(&alg, "x0"),
        y0: lie(&alg, "y0"),
        pairs: vec![(lie(&alg, "x1"), lie(&alg, "y1"), Scalar::from_ratio(1, 3))],
        xi: xi.clone(),
    };
    let recipes = jordanian_factors(&d, ("F1", "F0"));
    let f = build_twist(&alg, &recipes, &defaults(), 4).unwrap();
    let c = cocycle_check(&f).unwrap();
    assert!(c.passed(), "{:?}", c.witness);
    assert!(counit_check(&f.value).unwrap());

    // dropping the e^{−2tσ} dressing breaks the cocycle
    let bare = JordanianData { pairs: vec![(lie(&alg, "x1"), lie(&alg, "y1"), Scalar::zero())], ..d };
    let f = build_twist(&alg, &jordanian_factors(&bare, ("F1", "F0")), &defaults(), 4).unwrap();
    assert!(!cocycle_check(&f).unwrap().passed());
}

#[test]
fn general_jordanian_twist_without_dressing() {
    let alg = synthetic(&G::zero());
    let d = JordanianData {
        x0: lie(&alg, "x0"),
        y0: lie(&alg, "y0"),
        pairs: vec![(lie(&alg, "x1"), lie(&alg, "y1"), Scalar::zero())],
        xi: param("xi"),
    };
    let f = build_twist(&alg, &jordanian_factors(&d, ("F1", "F0")), &defaults(), 4).unwrap();
    assert!(cocycle_check(&f).unwrap().passed());
}

// ----------------------------------------------------------------- counit

#[test]
fn counit_examples() {
    let l = lorentz();
    let unit = GradedSeries::one(&l, 2, 3);
    assert!(counit_check(&unit).unwrap());
    let bad = unit.try_add(&at(tensor(&one(&l), &gen(&l, "h")), 1, 3)).unwrap();
    assert!(!counit_check(&bad).unwrap());
}

#[test]
fn every_catalog_twist_is_unital_and_invertible() {
    for e in all_entries() {
        let Ok(Some(_)) = e.resolved_twist() else { continue };
        let f = build_entry_twist(&e, &defaults(), 3).unwrap();
        assert_eq!(*f.value.part(0), TensorElement::one(&e.algebra, 2), "{}", e.id);
        assert!(counit_check(&f.value).unwrap(), "{}", e.id);
        assert!(inverse_check(&f.value).unwrap(), "{}", e.id);
    }
}

// ----------------------------------------------------- twisted coproduct

#[test]
fn identity_twist_leaves_the_coproduct() {
    let l = lorentz();
    let n = 3;
    let f = Twist::from_series("1", GradedSeries::one(&l, 2, n));
    for name in ["h", "e+", "e'-"] {
        let x = gen(&l, name);
        let d = twisted_coproduct(&f, &x).unwrap();
        assert_eq!(d, constant_series(&x, n).try_map_parts(|p| Ok(coproduct(&p.to_element()?))).unwrap());
    }
}

#[test]
fn momentum_twist_fixes_momenta() {
    let p = poincare();
    let f = poincare_twist(20, 3);
    let x = gen(&p, "P1");
    let d = twisted_coproduct(&f, &x).unwrap();
    let plain = GradedSeries::monomial(coproduct(&x), 0, 3);
    assert_eq!(d, plain);
}

#[test]
fn lorentz_jordanian_first_order_conjugation() {
    let l = lorentz();
    let f = l1(3);
    let x = gen(&l, "e+");
    let d = twisted_coproduct(&f, &x).unwrap();
    assert_eq!(*d.part(0), coproduct(&x));
    // 2h⊗σ₁ with σ₁ = ½·(2/3)e+
    let lin = tensor(&gen(&l, "h"), &gen(&l, "e+")).scale(&q(2, 3));
    let expect = lin.commutator(&coproduct(&x)).unwrap();
    assert!(!expect.is_zero());
    assert_eq!(*d.part(1), expect);
}

/// `(Δ^F)` applied to one slot of a rank-k series.
fn twisted_at(f: &GradedSeries, x: &GradedSeries, slot: usize) -> GradedSeries {
    let k = x.rank();
    let fs = f.try_map_parts(|p| p.embed(k + 1, &[slot, slot + 1])).unwrap();
    let dx = x.try_map_parts(|p| p.coproduct_at(slot)).unwrap();
    fs.try_mul(&dx).unwrap().try_mul(&fs.inverse().unwrap()).unwrap()
}

#[test]
fn twisted_coproducts_are_coassociative() {
    let cases = [
        (EntryId::Lorentz(1), 3),
        (EntryId::Lorentz(2), 2),
        (EntryId::Poincare(2), 2),
        (EntryId::Poincare(17), 3),
    ];
    for (id, n) in cases {
        let e = entry(id).unwrap();
        let f = build_entry_twist(&e, &defaults(), n).unwrap();
        for j in 0..e.algebra.dim() {
            let x = constant_series(&E::generator(&e.algebra, j), n);
            let d = twisted_coproduct_series(&f.value, &x).unwrap();
            let left = twisted_at(&f.value, &d, 0);
            let right = twisted_at(&f.value, &d, 1);
            assert_eq!(left, right, "{id} on {}", e.algebra.generator_name(j));
        }
    }
}

// -------------------------------------------------------------- u and ω

#[test]
fn identity_twist_has_unit_u() {
    let l = lorentz();
    let u = u_element(&GradedSeries::one(&l, 2, 3)).unwrap();
    assert_eq!(u, GradedSeries::one(&l, 1, 3));
}

#[test]
fn u_of_lorentz_jordanian_is_exponential() {
    let l = lorentz();
    let n = 5;
    let u = u_element(&l1(n).value).unwrap();
    let x = word(&l, &["h", "e+"]).scale(&q(-2, 3));
    let expect = GradedSeries::from_elements(&l, &[E::zero(&l), x], n).exp().unwrap();
    assert_eq!(u, expect);
}

#[test]
fn twisted_antipode_axiom_for_lorentz_jordanian() {
    let l = lorentz();
    let f = l1(4);
    for j in 0..l.dim() {
        let c = twisted_antipode_axiom(&f.value, &E::generator(&l, j)).unwrap();
        assert!(c.passed(), "{}: {:?}", l.generator_name(j), c.witness);
    }
    let c = twisted_antipode_axiom(&f.value, &word(&l, &["h", "e+"])).unwrap();
    assert!(c.passed());
}

#[test]
fn omega_conjugate_of_identity_is_identity() {
    let l = lorentz();
    let unit = GradedSeries::one(&l, 2, 3);
    assert_eq!(omega_conjugate(&unit).unwrap(), unit);
}

#[test]
fn omega_conjugate_matches_product_formula() {
    // exp(α/2 (he+⊗1 + 1⊗he+))·exp(2h⊗σ)·exp(−α/2 Δ(he+))
    let l = lorentz();
    let n = 3;
    let a = param("alpha");
    let he = Series::Product(vec![Series::lie(lie(&l, "h")), Series::lie(lie(&l, "e+"))]);
    let unit = Series::Product(vec![]);
    let hs = |k: Scalar| k.mul(&Scalar::from_ratio(1, 2)).mul(&a);
    let left = FactorRecipe::new("W", FactorKind::Series)
        .tensor(hs(Scalar::one()), he.clone(), unit.clone())
        .tensor(hs(Scalar::one()), unit.clone(), he.clone());
    let right = FactorRecipe::new("W'", FactorKind::Series)
        .tensor(hs(Scalar::from_int(-1)), he.clone(), unit.clone())
        .tensor(hs(Scalar::from_int(-1)), Series::lie(lie(&l, "h")), Series::lie(lie(&l, "e+")))
        .tensor(hs(Scalar::from_int(-1)), Series::lie(lie(&l, "e+")), Series::lie(lie(&l, "h")))
        .tensor(hs(Scalar::from_int(-1)), unit, he);
    let mut recipes = vec![left];
    recipes.extend(entry(EntryId::Lorentz(1)).unwrap().resolved_twist().unwrap().unwrap());
    recipes.push(right);
    let formula = build_twist(&l, &recipes, &defaults(), n).unwrap();
    let conj = omega_conjugate(&l1(n).value).unwrap();
    assert_eq!(conj, formula.value);
    assert!(cocycle_check_series(&conj).unwrap().passed());
    assert!(counit_check(&conj).unwrap());
}

// ------------------------------------------------------- local symmetry

#[test]
fn abelian_twist_is_locally_symmetric() {
    let p = poincare();
    let r = Bivector::wedge(&lie(&p, "P1"), &lie(&p, "P2")).unwrap().scale(&param("alpha"));
    let f = build_twist(&p, &[abelian_factor("F", &r)], &defaults(), 2).unwrap();
    // c = ½ relative to r̃ = −r, i.e. −½ relative to r
    assert_eq!(local_r_symmetry_check(&f.value, &r.scale(&Scalar::from_int(-1)), &defaults()).unwrap(), Symmetry::Symmetric(q(1, 2)));
    assert_eq!(local_r_symmetry_check(&f.value, &r, &defaults()).unwrap(), Symmetry::Symmetric(q(-1, 2)));
}

#[test]
fn lorentz_jordanian_is_not_locally_symmetric() {
    let e = entry(EntryId::Lorentz(1)).unwrap();
    let f = l1(2);
    assert_eq!(local_r_symmetry_check(&f.value, &e.r, &defaults()).unwrap(), Symmetry::NotSymmetric);
}

#[test]
fn omega_conjugate_is_locally_symmetric() {
    let e = entry(EntryId::Lorentz(1)).unwrap();
    let conj = omega_conjugate(&l1(3).value).unwrap();
    assert!(matches!(
        local_r_symmetry_check(&conj, &e.r, &defaults()).unwrap(),
        Symmetry::Symmetric(_)
    ));
    // the classical limit is unchanged by the conjugation
    assert_eq!(classical_limit(&conj).unwrap(), classical_limit(&l1(3).value).unwrap());
}

// ------------------------------------------------------ binomial form

#[test]
fn binomial_form_equals_the_exponential() {
    let l = lorentz();
    let h = l.index_of("h").unwrap();
    let ep = l.index_of("e+").unwrap();
    let b = binomial_jordanian(&l, h, ep, &q(2, 3), 5).unwrap();
    assert_eq!(b, l1(5).value);
    assert_eq!(*b.part(1), tensor(&gen(&l, "h"), &gen(&l, "e+")).scale(&q(2, 3)));
    assert_eq!(
        binomial_jordanian(&l, h, ep, &G::zero(), 4).unwrap(),
        GradedSeries::one(&l, 2, 4)
    );
}

// ------------------------------------------------------ case 17 orders

#[test]
fn case_seventeen_factors_commute() {
    let n = 4;
    let f = poincare_twist(17, n);
    assert_eq!(f.factors.len(), 2);
    let c = factors_commute(&f.factors[0].value, &f.factors[1].value).unwrap();
    assert!(c.passed(), "{:?}", c.witness);
    assert_eq!(f.reversed().unwrap().value, f.value);
}
