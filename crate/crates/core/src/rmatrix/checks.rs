use std::fmt;

use super::bivector::Bivector;
use super::trivector::{schouten, Trivector};
use crate::error::{Error, Result};
use crate::lie::builtin;
use crate::lie::{same_algebra, LieElement};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CybeKind {
    Homogeneous,
    Modified,
    NotCYBE,
}

impl fmt::Display for CybeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CybeKind::Homogeneous => "homogeneous",
            CybeKind::Modified => "modified",
            CybeKind::NotCYBE => "not-cybe",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct CybeVerdict {
    pub kind: CybeKind,
    /// `[[r, r]]`; zero exactly for the homogeneous case.
    pub omega: Trivector,
    pub invariant: bool,
}

/// Classifies `r` by its Schouten square.
pub fn cybe_classify(r: &Bivector) -> Result<CybeVerdict> {
    let omega = schouten(r, r)?;
    let invariant = omega.is_ad_invariant();
    let kind = if omega.is_zero() {
        CybeKind::Homogeneous
    } else if invariant {
        CybeKind::Modified
    } else {
        CybeKind::NotCYBE
    };
    Ok(CybeVerdict { kind, omega, invariant })
}

/// Splitting of a Poincaré bivector by how many legs are momenta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// momentum ∧ momentum
    pub a: Bivector,
    /// momentum ∧ Lorentz
    pub b: Bivector,
    /// Lorentz ∧ Lorentz
    pub c: Bivector,
}

pub fn decompose_abc(r: &Bivector) -> Result<Decomposition> {
    let alg = r.algebra();
    let is_poincare = [builtin::poincare(), builtin::poincare_physical()]
        .iter()
        .any(|p| p.id() == alg.id());
    if !is_poincare {
        return Err(Error::NotPoincare(alg.name().to_string()));
    }
    let gr = alg.grading();
    let mut parts = [Bivector::zero(alg), Bivector::zero(alg), Bivector::zero(alg)];
    for ((j, k), c) in r.terms() {
        let slot = match gr[j] + gr[k] {
            2 => 0,
            1 => 1,
            _ => 2,
        };
        parts[slot].add_basis(j, k, c);
    }
    let [a, b, c] = parts;
    Ok(Decomposition { a, b, c })
}

/// Outcome of the four compatibility conditions on `r = a + b + c`.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub decomposition: Decomposition,
    /// `[[c, c]] = 0`
    pub cc_vanishes: bool,
    /// `[[b, c]] = 0`
    pub bc_vanishes: bool,
    /// `2[[a, c]] + [[b, b]]`
    pub omega: Trivector,
    /// whether `omega` is ad-invariant (zero counts)
    pub omega_invariant: bool,
    /// `[[a, b]] = 0`
    pub ab_vanishes: bool,
    pub ab: Trivector,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.cc_vanishes && self.bc_vanishes && self.omega_invariant && self.ab_vanishes
    }

    /// `(name, pass)` in the order the conditions are stated.
    pub fn verdicts(&self) -> [(&'static str, bool); 4] {
        [
            ("cc", self.cc_vanishes),
            ("bc", self.bc_vanishes),
            ("2ac+bb", self.omega_invariant),
            ("ab", self.ab_vanishes),
        ]
    }
}

pub fn check_decomposition_conditions(r: &Bivector) -> Result<ConditionReport> {
    let d = decompose_abc(r)?;
    let cc = schouten(&d.c, &d.c)?;
    let bc = schouten(&d.b, &d.c)?;
    let ac = schouten(&d.a, &d.c)?;
    let bb = schouten(&d.b, &d.b)?;
    let ab = schouten(&d.a, &d.b)?;
    let omega = ac.scale(&Scalar::from_int(2)).try_add(&bb)?;
    Ok(ConditionReport {
        cc_vanishes: cc.is_zero(),
        bc_vanishes: bc.is_zero(),
        omega_invariant: omega.is_ad_invariant(),
        omega,
        ab_vanishes: ab.is_zero(),
        ab,
        decomposition: d,
    })
}

/// `r1 ≻ r2`: every element of the support of `r2` annihilates `r1`.
pub fn is_subordinated(r1: &Bivector, r2: &Bivector) -> Result<bool> {
    same_algebra(r1.algebra(), r2.algebra())?;
    for x in r2.support()? {
        if !r1.adjoint_action(&x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when the subalgebra generated by the legs is abelian.
pub fn is_abelian_type(r: &Bivector) -> Result<bool> {
    let legs = r.legs();
    for (i, x) in legs.iter().enumerate() {
        for y in &legs[i + 1..] {
            if !x.bracket(y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Data `(x0, y0, {(x_i, y_i, t_i)}, ξ)` of a Jordanian-type r-matrix
/// `ξ Σ y_ν∧x_ν`.
#[derive(Clone, Debug)]
pub struct JordanianData {
    pub x0: LieElement,
    pub y0: LieElement,
    pub pairs: Vec<(LieElement, LieElement, Scalar)>,
    pub xi: Scalar,
}

impl JordanianData {
    /// `ξ Σ_ν y_ν∧x_ν`.
    pub fn r_matrix(&self) -> Result<Bivector> {
        let mut r = Bivector::wedge(&self.y0, &self.x0)?;
        for (x, y, _) in &self.pairs {
            r = r.try_add(&Bivector::wedge(y, x)?)?;
        }
        Ok(r.scale(&self.xi))
    }
}

/// First violated defining relation, if any, plus the full list.
#[derive(Clone, Debug, Default)]
pub struct JordanianReport {
    pub violations: Vec<String>,
}

impl JordanianReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&str> {
        self.violations.first().map(String::as_str)
    }
}

/// Checks every defining relation of the Jordanian data and that
/// `ξ Σ y_ν∧x_ν` equals `claimed`.
pub fn verify_jordanian_data(d: &JordanianData, claimed: &Bivector) -> Result<JordanianReport> {
    let mut rep = JordanianReport::default();
    let mut expect = |label: String, got: LieElement, want: LieElement| {
        if got != want {
            rep.violations.push(format!("{label}: got {got}, expected {want}"));
        }
    };
    let zero = LieElement::zero(d.x0.algebra());
    let n = d.pairs.len();
    expect("[x0, y0] = y0".into(), d.x0.bracket(&d.y0)?, d.y0.clone());
    for (i, (_, y, t)) in d.pairs.iter().enumerate() {
        expect(format!("[x0, y_i] = t_i y_i (i={})", i + 1), d.x0.bracket(y)?, y.scale(t));
    }
    for (i, (x, _, t)) in d.pairs.iter().enumerate() {
        let one_minus_t = Scalar::one().sub(t);
        expect(
            format!("[x0, x_i] = (1 - t_i) x_i (i={})", i + 1),
            d.x0.bracket(x)?,
            x.scale(&one_minus_t),
        );
    }
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { d.y0.clone() } else { zero.clone() };
            let label = if i == j {
                format!("[x_i, y_i] = y0 (i={})", i + 1)
            } else {
                format!("[x_i, y_j] = 0 (i={}, j={})", i + 1, j + 1)
            };
            expect(label, d.pairs[i].0.bracket(&d.pairs[j].1)?, want);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            expect(
                format!("[x_i, x_j] = 0 (i={}, j={})", i + 1, j + 1),
                d.pairs[i].0.bracket(&d.pairs[j].0)?,
                zero.clone(),
            );
            expect(
                format!("[y_i, y_j] = 0 (i={}, j={})", i + 1, j + 1),
                d.pairs[i].1.bracket(&d.pairs[j].1)?,
                zero.clone(),
            );
        }
    }
    for (j, (x, y, _)) in d.pairs.iter().enumerate() {
        expect(format!("[y0, x_j] = 0 (j={})", j + 1), d.y0.bracket(x)?, zero.clone());
        expect(format!("[y0, y_j] = 0 (j={})", j + 1), d.y0.bracket(y)?, zero.clone());
    }
    let r = d.r_matrix()?;
    if &r != claimed {
        rep.violations.push(format!("xi * sum y^x = {r}, expected {claimed}"));
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lifting {
    Direct,
    Flipped,
}

/// Whether `r* = −r` under the chosen lifting of the star to g⊗g.
pub fn star_reality_check(r: &Bivector, lifting: Lifting) -> Result<bool> {
    let s = match lifting {
        Lifting::Direct => r.star_direct()?,
        Lifting::Flipped => r.star_flipped()?,
    };
    Ok(s.try_add(r)?.is_zero())
}
