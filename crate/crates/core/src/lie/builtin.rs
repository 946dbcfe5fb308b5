//! Built-in algebras: Lorentz in the canonical and complex bases, Poincaré
//! in the physical and light-cone bases, and the basis maps between them.

use once_cell::sync::Lazy;

use super::algebra::{Algebra, LieAlgebraBuilder};
use super::basis::{transport_structure, BasisMap};
use crate::error::Result;
use crate::scalars::GaussianRational;

type G = GaussianRational;

fn q(n: i64, d: i64) -> G {
    G::from_ratio(n, d)
}

fn qi(n: i64, d: i64) -> G {
    G::imag_ratio(n, d)
}

pub const LORENTZ_BASIS: [&str; 6] = ["e+", "e'+", "h", "h'", "e-", "e'-"];
pub const COMPLEX_BASIS: [&str; 6] = ["E1+", "E2+", "H1", "H2", "E1-", "E2-"];
pub const POINCARE_BASIS: [&str; 10] =
    ["P+", "P-", "P1", "P2", "e+", "e'+", "h", "h'", "e-", "e'-"];
pub const PHYSICAL_BASIS: [&str; 10] =
    ["M1", "M2", "M3", "N1", "N2", "N3", "P0", "P1", "P2", "P3"];

/// `[x, y] = Σ c·z` as `(x, y, [(z, c)])`.
type Relation = (&'static str, &'static str, Vec<(&'static str, G)>);

/// Lorentz brackets in the canonical basis, `[x, y] = Σ c·z`.
fn lorentz_relations() -> Vec<Relation> {
    vec![
        ("h", "e+", vec![("e+", q(1, 1))]),
        ("h", "e-", vec![("e-", q(-1, 1))]),
        ("e+", "e-", vec![("h", q(2, 1))]),
        ("h", "e'+", vec![("e'+", q(1, 1))]),
        ("h", "e'-", vec![("e'-", q(-1, 1))]),
        ("h'", "e+", vec![("e'+", q(1, 1))]),
        ("h'", "e-", vec![("e'-", q(-1, 1))]),
        ("e+", "e'-", vec![("h'", q(2, 1))]),
        ("e-", "e'+", vec![("h'", q(-2, 1))]),
        ("h'", "e'+", vec![("e+", q(-1, 1))]),
        ("h'", "e'-", vec![("e-", q(1, 1))]),
        ("e'+", "e'-", vec![("h", q(-2, 1))]),
    ]
}

/// Mixed momentum/Lorentz brackets of the light-cone basis, stored once and
/// checked against a fresh derivation from the physical basis in the tests.
fn light_cone_momentum_relations() -> Vec<Relation> {
    vec![
        ("P+", "h", vec![("P+", q(-1, 1))]),
        ("P+", "e-", vec![("P1", q(-2, 1))]),
        ("P+", "e'-", vec![("P2", q(-2, 1))]),
        ("P-", "e+", vec![("P1", q(-2, 1))]),
        ("P-", "e'+", vec![("P2", q(2, 1))]),
        ("P-", "h", vec![("P-", q(1, 1))]),
        ("P1", "e+", vec![("P+", q(-1, 1))]),
        ("P1", "h'", vec![("P2", q(1, 1))]),
        ("P1", "e-", vec![("P-", q(-1, 1))]),
        ("P2", "e'+", vec![("P+", q(1, 1))]),
        ("P2", "h'", vec![("P1", q(-1, 1))]),
        ("P2", "e'-", vec![("P-", q(-1, 1))]),
    ]
}

fn with_relations(
    mut b: LieAlgebraBuilder,
    rels: Vec<Relation>,
) -> Result<LieAlgebraBuilder> {
    for (x, y, v) in rels {
        b = b.bracket(x, y, &v)?;
    }
    Ok(b)
}

fn build_lorentz() -> Result<Algebra> {
    let b = with_relations(LieAlgebraBuilder::new("lorentz", &LORENTZ_BASIS), lorentz_relations())?;
    let star: Vec<(&str, Vec<(&str, G)>)> =
        LORENTZ_BASIS.iter().map(|g| (*g, vec![(*g, q(-1, 1))])).collect();
    let star: Vec<(&str, &[(&str, G)])> = star.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    b.star(&star)?.grading(&[1, 1, 0, 0, -1, -1])?.build()
}

fn build_complex_lorentz() -> Result<Algebra> {
    let mut b = LieAlgebraBuilder::new("lorentz-complex", &COMPLEX_BASIS);
    for k in ["1", "2"] {
        let (ep, em, hk) = (format!("E{k}+"), format!("E{k}-"), format!("H{k}"));
        b = b
            .bracket(&hk, &ep, &[(&ep, q(1, 1))])?
            .bracket(&hk, &em, &[(&em, q(-1, 1))])?
            .bracket(&ep, &em, &[(&hk, q(2, 1))])?;
    }
    let m = q(-1, 1);
    b.star(&[
        ("H1", &[("H2", m.clone())]),
        ("H2", &[("H1", m.clone())]),
        ("E1+", &[("E2+", m.clone())]),
        ("E2+", &[("E1+", m.clone())]),
        ("E1-", &[("E2-", m.clone())]),
        ("E2-", &[("E1-", m)]),
    ])?
    .grading(&[1, 1, 0, 0, -1, -1])?
    .build()
}

fn levi_civita(i: usize, j: usize) -> Option<(usize, i64)> {
    match (i, j) {
        (1, 2) => Some((3, 1)),
        (2, 3) => Some((1, 1)),
        (3, 1) => Some((2, 1)),
        (2, 1) => Some((3, -1)),
        (3, 2) => Some((1, -1)),
        (1, 3) => Some((2, -1)),
        _ => None,
    }
}

fn build_poincare_physical() -> Result<Algebra> {
    let mut b = LieAlgebraBuilder::new("poincare-physical", &PHYSICAL_BASIS);
    let name = |p: &str, k: usize| format!("{p}{k}");
    for i in 1..=3 {
        for j in 1..=3 {
            if let Some((k, s)) = levi_civita(i, j) {
                if i < j {
                    b = b
                        .bracket(&name("M", i), &name("M", j), &[(&name("M", k), qi(s, 1))])?
                        .bracket(&name("N", i), &name("N", j), &[(&name("M", k), qi(-s, 1))])?;
                }
                b = b
                    .bracket(&name("M", i), &name("N", j), &[(&name("N", k), qi(s, 1))])?
                    .bracket(&name("M", i), &name("P", j), &[(&name("P", k), qi(s, 1))])?;
            }
        }
        b = b
            .bracket(&name("N", i), &name("P", i), &[("P0", qi(-1, 1))])?
            .bracket(&name("N", i), "P0", &[(&name("P", i), qi(-1, 1))])?;
    }
    let star: Vec<(&str, Vec<(&str, G)>)> =
        PHYSICAL_BASIS.iter().map(|g| (*g, vec![(*g, q(1, 1))])).collect();
    let star: Vec<(&str, &[(&str, G)])> = star.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    b.star(&star)?.grading(&[0, 0, 0, 0, 0, 0, 1, 1, 1, 1])?.build()
}

fn build_poincare() -> Result<Algebra> {
    let b = LieAlgebraBuilder::new("poincare", &POINCARE_BASIS);
    let b = with_relations(b, lorentz_relations())?;
    let b = with_relations(b, light_cone_momentum_relations())?;
    let star: Vec<(&str, Vec<(&str, G)>)> = POINCARE_BASIS
        .iter()
        .map(|g| (*g, vec![(*g, if g.starts_with('P') { q(1, 1) } else { q(-1, 1) })]))
        .collect();
    let star: Vec<(&str, &[(&str, G)])> = star.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    b.star(&star)?.grading(&[1, 1, 1, 1, 0, 0, 0, 0, 0, 0])?.build()
}

/// Light-cone generators written in the physical basis.
fn light_cone_in_physical() -> Vec<(&'static str, Vec<(&'static str, G)>)> {
    vec![
        ("P+", vec![("P0", q(1, 1)), ("P3", q(1, 1))]),
        ("P-", vec![("P0", q(1, 1)), ("P3", q(-1, 1))]),
        ("P1", vec![("P1", q(1, 1))]),
        ("P2", vec![("P2", q(1, 1))]),
        ("e+", vec![("N1", qi(1, 1)), ("M2", qi(1, 1))]),
        ("e'+", vec![("M1", qi(1, 1)), ("N2", qi(-1, 1))]),
        ("h", vec![("N3", qi(1, 1))]),
        ("h'", vec![("M3", qi(1, 1))]),
        ("e-", vec![("N1", qi(1, 1)), ("M2", qi(-1, 1))]),
        ("e'-", vec![("M1", qi(1, 1)), ("N2", qi(1, 1))]),
    ]
}

fn build_physical_to_light_cone() -> Result<BasisMap> {
    let forward: Vec<(&str, Vec<(&str, G)>)> = vec![
        ("M1", vec![("e'+", qi(-1, 2)), ("e'-", qi(-1, 2))]),
        ("M2", vec![("e+", qi(-1, 2)), ("e-", qi(1, 2))]),
        ("M3", vec![("h'", qi(-1, 1))]),
        ("N1", vec![("e+", qi(-1, 2)), ("e-", qi(-1, 2))]),
        ("N2", vec![("e'-", qi(-1, 2)), ("e'+", qi(1, 2))]),
        ("N3", vec![("h", qi(-1, 1))]),
        ("P0", vec![("P+", q(1, 2)), ("P-", q(1, 2))]),
        ("P1", vec![("P1", q(1, 1))]),
        ("P2", vec![("P2", q(1, 1))]),
        ("P3", vec![("P+", q(1, 2)), ("P-", q(-1, 2))]),
    ];
    let backward = light_cone_in_physical();
    let f: Vec<(&str, &[(&str, G)])> = forward.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    let bw: Vec<(&str, &[(&str, G)])> = backward.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    BasisMap::new("physical-to-light-cone", &POINCARE_PHYSICAL, &POINCARE, &f, &bw)
}

fn build_canonical_to_complex() -> Result<BasisMap> {
    let forward: Vec<(&str, Vec<(&str, G)>)> = vec![
        ("h", vec![("H1", q(1, 1)), ("H2", q(1, 1))]),
        ("h'", vec![("H1", qi(-1, 1)), ("H2", qi(1, 1))]),
        ("e+", vec![("E1+", q(1, 1)), ("E2+", q(1, 1))]),
        ("e-", vec![("E1-", q(1, 1)), ("E2-", q(1, 1))]),
        ("e'+", vec![("E1+", qi(-1, 1)), ("E2+", qi(1, 1))]),
        ("e'-", vec![("E1-", qi(-1, 1)), ("E2-", qi(1, 1))]),
    ];
    let backward: Vec<(&str, Vec<(&str, G)>)> = vec![
        ("H1", vec![("h", q(1, 2)), ("h'", qi(1, 2))]),
        ("H2", vec![("h", q(1, 2)), ("h'", qi(-1, 2))]),
        ("E1+", vec![("e+", q(1, 2)), ("e'+", qi(1, 2))]),
        ("E2+", vec![("e+", q(1, 2)), ("e'+", qi(-1, 2))]),
        ("E1-", vec![("e-", q(1, 2)), ("e'-", qi(1, 2))]),
        ("E2-", vec![("e-", q(1, 2)), ("e'-", qi(-1, 2))]),
    ];
    let f: Vec<(&str, &[(&str, G)])> = forward.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    let bw: Vec<(&str, &[(&str, G)])> = backward.iter().map(|(g, v)| (*g, v.as_slice())).collect();
    BasisMap::new("canonical-to-complex", &LORENTZ, &COMPLEX_LORENTZ, &f, &bw)
}

static LORENTZ: Lazy<Algebra> = Lazy::new(|| build_lorentz().expect("lorentz relations"));
static COMPLEX_LORENTZ: Lazy<Algebra> =
    Lazy::new(|| build_complex_lorentz().expect("complex lorentz relations"));
static POINCARE_PHYSICAL: Lazy<Algebra> =
    Lazy::new(|| build_poincare_physical().expect("physical poincare relations"));
static POINCARE: Lazy<Algebra> = Lazy::new(|| build_poincare().expect("light-cone poincare"));
static PHYSICAL_TO_LIGHT_CONE: Lazy<BasisMap> =
    Lazy::new(|| build_physical_to_light_cone().expect("physical to light-cone map"));
static CANONICAL_TO_COMPLEX: Lazy<BasisMap> =
    Lazy::new(|| build_canonical_to_complex().expect("canonical to complex map"));

/// Lorentz algebra in the canonical basis `(e+, e'+, h, h', e-, e'-)`, `x* = -x`.
pub fn lorentz() -> Algebra {
    LORENTZ.clone()
}

/// Lorentz algebra in the complex basis `(E1+, E2+, H1, H2, E1-, E2-)`.
pub fn complex_lorentz() -> Algebra {
    COMPLEX_LORENTZ.clone()
}

/// Poincaré algebra in the light-cone basis
/// `(P+, P-, P1, P2, e+, e'+, h, h', e-, e'-)`; the internal basis for all
/// Poincaré r-matrices and twists.
pub fn poincare() -> Algebra {
    POINCARE.clone()
}

/// Poincaré algebra in the physical basis of rotations `M`, boosts `N` and
/// momenta `P`, with all generators Hermitian.
pub fn poincare_physical() -> Algebra {
    POINCARE_PHYSICAL.clone()
}

pub fn physical_to_light_cone() -> &'static BasisMap {
    &PHYSICAL_TO_LIGHT_CONE
}

pub fn canonical_to_complex() -> &'static BasisMap {
    &CANONICAL_TO_COMPLEX
}

/// Looks up a built-in algebra by name.
pub fn by_name(name: &str) -> Option<Algebra> {
    match name {
        "lorentz" => Some(lorentz()),
        "lorentz-complex" => Some(complex_lorentz()),
        "poincare" => Some(poincare()),
        "poincare-physical" => Some(poincare_physical()),
        _ => None,
    }
}

/// Recomputes the light-cone structure constants from the physical
/// relations through the change of basis, without consulting the stored table.
pub fn derive_light_cone() -> Result<Algebra> {
    let images = light_cone_in_physical();
    let images: Vec<Vec<(&str, G)>> = images.into_iter().map(|(_, v)| v).collect();
    Ok(transport_structure(&poincare_physical(), "poincare-derived", &POINCARE_BASIS, &images)?
        .build_unchecked())
}

/// Physical Poincaré relations with one constant overwritten, for exercising
/// the Jacobi checker on a broken table.
pub fn poincare_physical_mutated(x: &str, y: &str, z: &str, c: G) -> Result<Algebra> {
    let mut b = LieAlgebraBuilder::new("poincare-mutated", &PHYSICAL_BASIS);
    let alg = poincare_physical();
    for j in 0..alg.dim() {
        for k in j + 1..alg.dim() {
            let v: Vec<(&str, G)> = alg
                .bracket_basis(j, k)
                .iter()
                .map(|(l, c)| (alg.generator_name(*l), c.clone()))
                .collect();
            if !v.is_empty() {
                b = b.bracket(alg.generator_name(j), alg.generator_name(k), &v)?;
            }
        }
    }
    Ok(b.set_constant(x, y, z, c)?.build_unchecked())
}
