use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::recipe::{FactorKind, FactorRecipe, Series};
use crate::error::{Error, Result};
use crate::lie::builtin::{canonical_to_complex, complex_lorentz, lorentz, poincare};
use crate::lie::{Algebra, LieElement};
use crate::rmatrix::{Bivector, JordanianData};
use crate::scalars::{ParamSymbol, Reality, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryId {
    Lorentz(u8),
    Poincare(u8),
    Tilde9,
    Tilde12,
}

impl EntryId {
    /// The 25 numbered entries followed by the two variants.
    pub fn all() -> Vec<EntryId> {
        let mut v: Vec<EntryId> = (1..=4).map(EntryId::Lorentz).collect();
        v.extend((1..=21).map(EntryId::Poincare));
        v.push(EntryId::Tilde9);
        v.push(EntryId::Tilde12);
        v
    }

    pub fn is_variant(&self) -> bool {
        matches!(self, EntryId::Tilde9 | EntryId::Tilde12)
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryId::Lorentz(j) => write!(f, "L{j}"),
            EntryId::Poincare(n) => write!(f, "P{n}"),
            EntryId::Tilde9 => f.write_str("tilde9"),
            EntryId::Tilde12 => f.write_str("tilde12"),
        }
    }
}

impl FromStr for EntryId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || Error::UnknownEntry(s.to_string());
        let id = match t.as_str() {
            "tilde9" => EntryId::Tilde9,
            "tilde12" => EntryId::Tilde12,
            _ => {
                let (lorentz, digits) = match t.strip_prefix('l') {
                    Some(d) => (true, d),
                    None => (false, t.strip_prefix('p').unwrap_or(&t)),
                };
                let n: u8 = digits.parse().map_err(|_| bad())?;
                match (lorentz, n) {
                    (true, 1..=4) => EntryId::Lorentz(n),
                    (false, 1..=21) => EntryId::Poincare(n),
                    _ => return Err(bad()),
                }
            }
        };
        Ok(id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Homogeneous,
    Modified,
    NotCYBE,
    ReportOnly,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Homogeneous => "homogeneous",
            Expected::Modified => "modified",
            Expected::NotCYBE => "not-cybe",
            Expected::ReportOnly => "report-only",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    Abelian,
    Jordanian,
    Other,
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieceKind::Abelian => "abelian",
            PieceKind::Jordanian => "jordanian",
            PieceKind::Other => "other",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Piece {
    pub name: String,
    pub r: Bivector,
    pub kind: PieceKind,
    pub jordanian: Option<JordanianData>,
}

/// `Σ_{i ∈ left} pieces[i] ≻ pieces[right]`.
#[derive(Clone, Debug)]
pub struct Claim {
    pub left: Vec<usize>,
    pub right: usize,
    /// Claims that are only reported (the entry has no twist to back them).
    pub asserted: bool,
}

#[derive(Clone, Debug)]
pub enum Plan {
    /// Factors in product order; the leftmost factor is applied last.
    Twist(Vec<FactorRecipe>),
    /// The twist of another entry, transported by generator names.
    Delegated(EntryId),
    None(&'static str),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: EntryId,
    pub algebra: Algebra,
    pub r: Bivector,
    pub expected: Expected,
    pub pieces: Vec<Piece>,
    pub claims: Vec<Claim>,
    pub plan: Plan,
}

impl CatalogEntry {
    pub fn params(&self) -> BTreeSet<ParamSymbol> {
        let mut out = BTreeSet::new();
        for (_, c) in self.r.terms() {
            out.extend(c.vars());
        }
        if let Plan::Twist(fs) = &self.plan {
            for f in fs {
                out.extend(f.params());
            }
        }
        out
    }

    pub fn twist_factors(&self) -> Option<&[FactorRecipe]> {
        match &self.plan {
            Plan::Twist(f) => Some(f),
            _ => None,
        }
    }

    /// Twist factors with delegation resolved, expressed over this entry's
    /// algebra; `None` when the entry has no twist.
    pub fn resolved_twist(&self) -> Result<Option<Vec<FactorRecipe>>> {
        match &self.plan {
            Plan::Twist(f) => Ok(Some(f.clone())),
            Plan::Delegated(id) => {
                let other = entry(*id)?;
                match other.resolved_twist()? {
                    Some(f) => Ok(Some(
                        f.iter().map(|r| r.embed(&self.algebra)).collect::<Result<_>>()?,
                    )),
                    None => Ok(None),
                }
            }
            Plan::None(_) => Ok(None),
        }
    }

    /// Σ of the listed pieces.
    pub fn piece_sum(&self, which: &[usize]) -> Result<Bivector> {
        let mut s = Bivector::zero(&self.algebra);
        for &i in which {
            s = s.try_add(&self.pieces[i].r)?;
        }
        Ok(s)
    }

    pub fn dump(&self) -> String {
        let mut s = format!(
            "== {} ({}) expected={}\nr = {}\n",
            self.id,
            self.algebra.name(),
            self.expected,
            self.r
        );
        for p in &self.pieces {
            s += &format!("piece {} [{}] = {}\n", p.name, p.kind, p.r);
            if let Some(d) = &p.jordanian {
                s += &format!("  x0 = {}\n  y0 = {}\n  xi = {}\n", d.x0, d.y0, d.xi);
                for (i, (x, y, t)) in d.pairs.iter().enumerate() {
                    s += &format!("  pair {}: x = {}, y = {}, t = {}\n", i + 1, x, y, t);
                }
            }
        }
        for c in &self.claims {
            let left: Vec<&str> = c.left.iter().map(|&i| self.pieces[i].name.as_str()).collect();
            s += &format!(
                "claim {} > {}{}\n",
                left.join(" + "),
                self.pieces[c.right].name,
                if c.asserted { "" } else { " (reported)" }
            );
        }
        match &self.plan {
            Plan::Twist(fs) => {
                let labels: Vec<&str> = fs.iter().map(|f| f.label.as_str()).collect();
                s += &format!("twist F = {}\n", labels.join(" "));
                for f in fs {
                    s += &format!("  {f}\n");
                }
            }
            Plan::Delegated(id) => s += &format!("twist: as {id}\n"),
            Plan::None(why) => s += &format!("twist: none ({why})\n"),
        }
        s
    }
}

pub fn param(name: &str, reality: Reality) -> Scalar {
    Scalar::param(ParamSymbol::new(name, reality))
}

fn p(name: &str) -> Scalar {
    param(name, Reality::Real)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ratio(a: &Scalar, b: &Scalar) -> Scalar {
    a.div(b).expect("nonzero parameter")
}

/// Generator lookup on the light-cone Poincaré basis; `P0` and `P3` are
/// expanded as `(P+ ± P-)/2`.
fn gen(alg: &Algebra, name: &str) -> LieElement {
    let half = Scalar::from_ratio(1, 2);
    match name {
        "P0" | "P3" if alg.index_of(name).is_err() => {
            let s = if name == "P0" { half.clone() } else { half.neg() };
            LieElement::from_terms(alg, &[("P+", half), ("P-", s)]).expect("light-cone basis")
        }
        _ => LieElement::generator(alg, name).expect("built-in generator"),
    }
}

fn lin(alg: &Algebra, terms: &[(Scalar, &str)]) -> LieElement {
    let mut x = LieElement::zero(alg);
    for (c, n) in terms {
        x = &x + &gen(alg, n).scale(c);
    }
    x
}

/// Accumulates `Σ c·(x∧y)`.
struct Biv {
    r: Bivector,
}

impl Biv {
    fn new(alg: &Algebra) -> Self {
        Biv { r: Bivector::zero(alg) }
    }

    fn w(mut self, c: Scalar, x: &LieElement, y: &LieElement) -> Self {
        let t = Bivector::wedge(x, y).expect("same algebra").scale(&c);
        self.r = &self.r + &t;
        self
    }

    /// Generator-name shorthand for `c·(x∧y)`.
    fn g(self, c: Scalar, x: &str, y: &str) -> Self {
        let alg = self.r.algebra().clone();
        self.w(c, &gen(&alg, x), &gen(&alg, y))
    }

    fn done(self) -> Bivector {
        self.r
    }
}

fn piece(name: &str, r: Bivector, kind: PieceKind) -> Piece {
    Piece { name: name.to_string(), r, kind, jordanian: None }
}

fn jpiece(name: &str, d: JordanianData) -> Piece {
    let r = d.r_matrix().expect("jordanian data in one algebra");
    Piece { name: name.to_string(), r, kind: PieceKind::Jordanian, jordanian: Some(d) }
}

fn claim(left: &[usize], right: usize) -> Claim {
    Claim { left: left.to_vec(), right, asserted: true }
}

fn lie(x: LieElement) -> Series {
    Series::lie(x)
}

/// Abelian factor `exp(Σ c·x∧y)` over generator names.
fn abelian(label: &str, terms: &[(Scalar, LieElement, LieElement)]) -> FactorRecipe {
    let mut f = FactorRecipe::new(label, FactorKind::Abelian);
    for (c, x, y) in terms {
        f = f.wedge(c.clone(), lie(x.clone()), lie(y.clone()));
    }
    f
}

/// The two factors of a Jordanian-type twist,
/// `exp(ξ Σ x_i⊗y_i e^{−2 t_i σ})·exp(2 x0⊗σ)`, `σ = ½ log(1 + ξ y0)`.
pub fn jordanian_factors(d: &JordanianData, labels: (&str, &str)) -> Vec<FactorRecipe> {
    let sigma = Series::sigma(d.y0.scale(&d.xi));
    let mut out = Vec::new();
    if !d.pairs.is_empty() {
        let mut f = FactorRecipe::new(labels.0, FactorKind::Jordanian);
        for (x, y, t) in &d.pairs {
            let right = if t.is_zero() {
                lie(y.clone())
            } else {
                let damp = Series::Exp(Box::new(sigma.clone().scaled(t.mul(&int(-2)))));
                Series::Product(vec![lie(y.clone()), damp])
            };
            f = f.tensor(d.xi.clone(), lie(x.clone()), right);
        }
        out.push(f);
    }
    out.push(
        FactorRecipe::new(labels.1, FactorKind::Jordanian)
            .tensor(int(2), lie(d.x0.clone()), sigma),
    );
    out
}

/// Abelian twist `exp(½ Σ x_i∧y_i)` for `r = Σ y_i∧x_i`, i.e. `exp(−½ r)`.
pub fn abelian_factor(label: &str, r: &Bivector) -> FactorRecipe {
    let alg = r.algebra();
    let mut f = FactorRecipe::new(label, FactorKind::Abelian);
    let k = Scalar::from_ratio(-1, 2);
    for ((j, l), c) in r.terms() {
        f = f.wedge(
            c.mul(&k),
            lie(LieElement::basis(alg, j)),
            lie(LieElement::basis(alg, l)),
        );
    }
    f
}

/// The Lorentz r-matrices in the canonical basis; the sign choice in the
/// fourth is the parameter λ.
pub fn lorentz_r(j: u8, reality: Reality) -> Result<Bivector> {
    let l = lorentz();
    let (a, b, g, lam) = (
        param("alpha", reality),
        param("beta", reality),
        param("gamma", reality),
        param("lambda", reality),
    );
    let r = match j {
        1 => Biv::new(&l).g(a, "e+", "h").done(),
        2 => Biv::new(&l)
            .g(a.clone(), "e+", "h")
            .g(a.neg(), "e'+", "h'")
            .g(b.mul(&int(2)), "e'+", "e+")
            .done(),
        3 => Biv::new(&l)
            .g(a.clone(), "e'+", "e-")
            .g(a, "e+", "e'-")
            .g(b.clone(), "e+", "e-")
            .g(b.neg(), "e'+", "e'-")
            .g(g.mul(&int(-2)), "h", "h'")
            .done(),
        4 => Biv::new(&l)
            .g(a.clone(), "e'+", "e-")
            .g(a.clone(), "e+", "e'-")
            .g(a.mul(&int(-2)), "h", "h'")
            .g(lam, "e+", "e'+")
            .done(),
        _ => return Err(Error::UnknownEntry(format!("L{j}"))),
    };
    Ok(r)
}

/// Pieces of the third and fourth Lorentz r-matrices written in the complex
/// basis, returned in the complex algebra.
pub fn lorentz_complex_pieces(j: u8, reality: Reality) -> Result<(Bivector, Bivector)> {
    let c = complex_lorentz();
    let (a, b, g, lam) = (
        param("alpha", reality),
        param("beta", reality),
        param("gamma", reality),
        param("lambda", reality),
    );
    let i = Scalar::i();
    match j {
        3 => {
            let zp = b.add(&i.mul(&a));
            let zm = b.sub(&i.mul(&a));
            let r1 = Biv::new(&c).g(zp.mul(&int(2)), "E1+", "E1-").g(zm.mul(&int(2)), "E2+", "E2-");
            let r2 = Biv::new(&c).g(i.mul(&g).mul(&int(4)), "H2", "H1");
            Ok((r1.done(), r2.done()))
        }
        4 => {
            let k = i.mul(&a).mul(&int(2));
            let r1 = Biv::new(&c)
                .g(k.clone(), "E1+", "E1-")
                .g(k.neg(), "E2+", "E2-")
                .g(k.mul(&int(-2)), "H1", "H2");
            let r2 = Biv::new(&c).g(i.mul(&lam).mul(&int(2)), "E1+", "E2+");
            Ok((r1.done(), r2.done()))
        }
        _ => Err(Error::UnknownEntry(format!("L{j}"))),
    }
}

/// Carries a complex-basis bivector back to the canonical basis.
fn complex_to_canonical(r: &Bivector) -> Bivector {
    let m = canonical_to_complex();
    let l = lorentz();
    let mut out = Bivector::zero(&l);
    let c = complex_lorentz();
    for ((j, k), s) in r.terms() {
        let x = m.apply_backward(&LieElement::basis(&c, j)).expect("complex basis");
        let y = m.apply_backward(&LieElement::basis(&c, k)).expect("complex basis");
        out = &out + &Bivector::wedge(&x, &y).expect("canonical").scale(s);
    }
    out
}

fn lorentz_entry(j: u8) -> Result<CatalogEntry> {
    let l = lorentz();
    let r = lorentz_r(j, Reality::Real)?;
    let a = p("alpha");
    let (pieces, claims, plan, expected) = match j {
        1 => {
            let d = JordanianData {
                x0: gen(&l, "h"),
                y0: gen(&l, "e+"),
                pairs: vec![],
                xi: a.clone(),
            };
            let plan = Plan::Twist(jordanian_factors(&d, ("F0", "F")));
            (vec![jpiece("r", d)], vec![], plan, Expected::Homogeneous)
        }
        2 => {
            let ae = gen(&l, "e+").scale(&a);
            let aep = gen(&l, "e'+").scale(&a);
            // σ = ½ log((1 + αe+)² + (αe'+)²), φ = arctan(αe'+ / (1 + αe+))
            let sigma = Series::Log1p(Box::new(Series::Sum(vec![
                lie(ae.scale(&int(2))),
                Series::Product(vec![lie(ae.clone()), lie(ae.clone())]),
                Series::Product(vec![lie(aep.clone()), lie(aep.clone())]),
            ])))
            .scaled(Scalar::from_ratio(1, 2));
            let phi = Series::Arctan(Box::new(Series::Product(vec![
                lie(aep),
                Series::GeomInv(Box::new(lie(ae))),
            ])));
            let coef = Scalar::i().mul(&ratio(&p("beta"), &a.mul(&a)));
            let f2 = FactorRecipe::new("F''", FactorKind::Series).wedge(
                coef,
                sigma.clone(),
                phi.clone(),
            );
            let f1 = FactorRecipe::new("F'", FactorKind::Series)
                .tensor(int(1), lie(gen(&l, "h")), sigma)
                .tensor(int(-1), lie(gen(&l, "h'")), phi);
            (
                vec![piece("r", r.clone(), PieceKind::Other)],
                vec![],
                Plan::Twist(vec![f2, f1]),
                Expected::Homogeneous,
            )
        }
        3 | 4 => {
            // The Cartan/abelian piece agrees with its complex-basis form.
            // The α-part of the complex form carries the opposite sign on
            // e'+∧e- + e+∧e'-, so r' is taken as the remainder of r.
            let (_, r2) = lorentz_complex_pieces(j, Reality::Real)?;
            let r2 = complex_to_canonical(&r2);
            let pieces = vec![
                piece("r'", &r - &r2, PieceKind::Other),
                piece("r''", r2, PieceKind::Abelian),
            ];
            let claims = if j == 3 { vec![claim(&[0], 1)] } else { vec![] };
            (
                pieces,
                claims,
                Plan::None("quantization needs a q-deformed algebra"),
                Expected::Modified,
            )
        }
        _ => return Err(Error::UnknownEntry(format!("L{j}"))),
    };
    Ok(CatalogEntry { id: EntryId::Lorentz(j), algebra: l, r, expected, pieces, claims, plan })
}

/// `b_{P+} = P1∧e+ − P2∧e'+ + P+∧h`.
fn b_pplus(alg: &Algebra) -> Bivector {
    Biv::new(alg).g(int(1), "P1", "e+").g(int(-1), "P2", "e'+").g(int(1), "P+", "h").done()
}

/// `b_{P2} = 2P1∧h' + P-∧e'+ − P+∧e'-`.
fn b_p2(alg: &Algebra) -> Bivector {
    Biv::new(alg).g(int(2), "P1", "h'").g(int(1), "P-", "e'+").g(int(-1), "P+", "e'-").done()
}

/// Both momentum-dependent helper bivectors of the table.
pub fn b_helpers() -> (Bivector, Bivector) {
    let p = poincare();
    (b_pplus(&p), b_p2(&p))
}

/// Jordanian data of `β1 b_{P+}` shifted by `x1 = e+ − shift·P+`.
fn jordanian_bpplus(alg: &Algebra, shift: Option<Scalar>) -> JordanianData {
    let b1 = p("beta1");
    let x1 = match shift {
        Some(s) => lin(alg, &[(int(1), "e+"), (s.neg(), "P+")]),
        None => gen(alg, "e+"),
    };
    JordanianData {
        x0: gen(alg, "h"),
        y0: gen(alg, "P+"),
        pairs: vec![
            (x1, gen(alg, "P1"), Scalar::zero()),
            (gen(alg, "e'+").scale(&int(-1)), gen(alg, "P2"), Scalar::zero()),
        ],
        xi: b1,
    }
}

fn sigma_plus(alg: &Algebra) -> Series {
    Series::sigma(gen(alg, "P+").scale(&p("beta1")))
}

/// `exp(α1 P3∧P0 + α2 P2∧P1)`.
fn momenta_factor(label: &str, alg: &Algebra) -> FactorRecipe {
    abelian(
        label,
        &[
            (p("alpha1"), gen(alg, "P3"), gen(alg, "P0")),
            (p("alpha2"), gen(alg, "P2"), gen(alg, "P1")),
        ],
    )
}

fn momenta_bivector(alg: &Algebra) -> Bivector {
    Biv::new(alg).g(p("alpha1"), "P0", "P3").g(p("alpha2"), "P1", "P2").done()
}

fn poincare_entry(n: u8) -> Result<CatalogEntry> {
    let al = poincare();
    let alg = &al;
    let (a, at, a1, a2) = (p("alpha"), p("alphat"), p("alpha1"), p("alpha2"));
    let (b1, b2, g, chi) = (p("beta1"), p("beta2"), p("gamma"), p("chi"));
    let el = |t: &[(Scalar, &str)]| lin(alg, t);
    let sp = sigma_plus(alg);

    let mut expected = Expected::Homogeneous;
    let (pieces, claims, plan): (Vec<Piece>, Vec<Claim>, Plan) = match n {
        1 => {
            let r1 = Biv::new(alg).g(a.clone(), "P+", "P-").g(at.clone(), "P1", "P2").done();
            let r2 = Biv::new(alg).g(g.clone(), "h'", "h").done();
            let plan = vec![
                abelian("F''", &[(g.clone(), gen(alg, "h"), gen(alg, "h'"))]),
                abelian("F'",
                    &[
                        (a.clone(), gen(alg, "P-"), gen(alg, "P+")),
                        (at.clone(), gen(alg, "P2"), gen(alg, "P1")),
                    ],
                ),
            ];
            (
                vec![piece("r'", r1, PieceKind::Abelian), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        2 | 7 => {
            let d = jordanian_bpplus(alg, None);
            let mut pieces = vec![jpiece("r'", d.clone())];
            let mut plan = vec![abelian_series_hprime(alg, &b1, &b2, &sp)];
            let mut claims = vec![];
            if n == 2 {
                pieces.push(piece(
                    "r''",
                    Biv::new(alg).g(g.clone(), "e'+", "e+").done(),
                    PieceKind::Abelian,
                ));
                plan.push(abelian("F''", &[(g.clone(), gen(alg, "e+"), gen(alg, "e'+"))]));
                claims.push(claim(&[0], 1));
            }
            let last = pieces.len();
            pieces.push(piece(
                "r'''",
                Biv::new(alg).g(b2.clone(), "P+", "h'").done(),
                PieceKind::Abelian,
            ));
            claims.push(claim(&(0..last).collect::<Vec<_>>(), last));
            plan.extend(jordanian_factors(&d, ("F'_1", "F'_0")));
            (pieces, claims, Plan::Twist(plan))
        }
        3 => {
            let shift = ratio(&a, &b1);
            let d = jordanian_bpplus(alg, Some(shift.clone()));
            let x1 = el(&[(int(1), "e+"), (shift.neg(), "P+")]);
            let r2 = Bivector::wedge(&gen(alg, "e'+"), &x1)?.scale(&g);
            let k3 = ratio(&g.mul(&a), &b1);
            let r3 = Biv::new(alg).g(k3, "e'+", "P+").done();
            let f3 = FactorRecipe::new("F'''", FactorKind::Jordanian).wedge(
                ratio(&g.mul(&a), &b1.mul(&b1)),
                sp.clone(),
                lie(gen(alg, "e'+")),
            );
            let f2 = abelian("F''", &[(g.clone(), x1.clone(), gen(alg, "e'+"))]);
            let mut plan = vec![f3, f2];
            plan.extend(jordanian_factors(&d, ("F'_1", "F'_0")));
            (
                vec![
                    jpiece("r'", d),
                    piece("r''", r2, PieceKind::Abelian),
                    piece("r'''", r3, PieceKind::Abelian),
                ],
                vec![claim(&[0], 1), claim(&[0, 1], 2)],
                Plan::Twist(plan),
            )
        }
        4 => {
            let pa = el(&[(a1.clone(), "P1"), (a2.clone(), "P2")]);
            let r1 = Bivector::wedge(&gen(alg, "P+"), &pa)?;
            let r2 = Bivector::wedge(
                &el(&[(int(1), "e'+"), (b1.clone(), "P1")]),
                &el(&[(int(1), "e+"), (b1.neg(), "P2")]),
            )?
            .scale(&g);
            let plan = vec![
                abelian("F''",
                    &[(
                        g.clone(),
                        el(&[(int(1), "e+"), (b1.neg(), "P1")]),
                        el(&[(int(1), "e'+"), (b1.clone(), "P2")]),
                    )],
                ),
                abelian("F'", &[(int(1), pa, gen(alg, "P+"))]),
            ];
            (
                vec![piece("r'", r1, PieceKind::Abelian), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        5 => {
            let r = lorentz_r(2, Reality::Real)?.embed(alg)?;
            (vec![piece("r", r, PieceKind::Other)], vec![], Plan::Delegated(EntryId::Lorentz(2)))
        }
        6 => {
            expected = Expected::Modified;
            let r1 = b_p2(alg).scale(&b1);
            let r2 = Biv::new(alg).g(g.clone(), "h", "e+").done();
            let r3 = Biv::new(alg).g(b2.clone(), "P2", "e+").done();
            let mut c1 = claim(&[0], 1);
            let mut c2 = claim(&[0, 1], 2);
            c1.asserted = false;
            c2.asserted = false;
            (
                vec![
                    piece("r'", r1, PieceKind::Jordanian),
                    piece("r''", r2, PieceKind::Other),
                    piece("r'''", r3, PieceKind::Abelian),
                ],
                vec![c1, c2],
                Plan::None("no quantization known"),
            )
        }
        8 => {
            let d = jordanian_bpplus(alg, None);
            let r2 = Biv::new(alg).g(b2.clone(), "P+", "e+").done();
            let mut plan = vec![FactorRecipe::new("F''", FactorKind::Jordanian).wedge(
                ratio(&b2, &b1),
                lie(gen(alg, "e+")),
                sp.clone(),
            )];
            plan.extend(jordanian_factors(&d, ("F'_1", "F'_0")));
            (
                vec![jpiece("r'", d), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        9 => {
            let k = ratio(&a.mul(&b2), &b1.mul(&b1));
            let x0 = el(&[(int(1), "h"), (ratio(&a, &b1), "P2"), (k.clone(), "P1")]);
            let x1 = el(&[(int(1), "e+"), (ratio(&b2, &b1), "e'+"), (k.clone(), "P+")]);
            let d = JordanianData {
                x0,
                y0: gen(alg, "P+"),
                pairs: vec![(x1.clone(), gen(alg, "P1"), Scalar::zero())],
                xi: b1.clone(),
            };
            let r2 = Bivector::wedge(&gen(alg, "P+"), &x1.scale(&b1))?.scale(&chi);
            let mut plan = vec![FactorRecipe::new("F''", FactorKind::Jordanian).wedge(
                chi.clone(),
                lie(x1),
                sp.clone(),
            )];
            plan.extend(jordanian_factors(&d, ("F'_1", "F'_0")));
            (
                vec![jpiece("r'", d), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        10 => {
            let r1 = Biv::new(alg).g(b1.clone(), "P+", "e+").done();
            let y2 = el(&[(a1.mul(&int(2)), "P1"), (a2.neg(), "P+")]);
            let y3 = el(&[(b1.clone(), "e'+"), (a1.neg(), "P-"), (a1.mul(&int(2)), "P2")]);
            let r2 = Bivector::wedge(&gen(alg, "P2"), &y2)?;
            let r3 = Bivector::wedge(&gen(alg, "P1"), &y3)?;
            let plan = vec![
                abelian("F'''", &[(int(1), y3, gen(alg, "P1"))]),
                abelian("F''", &[(int(1), y2, gen(alg, "P2"))]),
                abelian("F'", &[(b1.clone(), gen(alg, "e+"), gen(alg, "P+"))]),
            ];
            (
                vec![
                    piece("r'", r1, PieceKind::Abelian),
                    piece("r''", r2, PieceKind::Abelian),
                    piece("r'''", r3, PieceKind::Abelian),
                ],
                vec![claim(&[0], 1), claim(&[0, 1], 2)],
                Plan::Twist(plan),
            )
        }
        11 => {
            let r1 = Biv::new(alg).g(a1.clone(), "P+", "P1").done();
            let y = el(&[(b1.clone(), "e+"), (a2.neg(), "P-")]);
            let r2 = Bivector::wedge(&gen(alg, "P2"), &y)?;
            let plan = vec![
                abelian("F''", &[(int(1), y, gen(alg, "P2"))]),
                abelian("F'", &[(a1.clone(), gen(alg, "P1"), gen(alg, "P+"))]),
            ];
            (
                vec![piece("r'", r1, PieceKind::Abelian), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        12 => {
            let r = tilde12_r(alg, false);
            (vec![piece("r", r, PieceKind::Other)], vec![], Plan::None("no twist known"))
        }
        13..=16 => {
            let (mom, lor) = match n {
                13 => ("P0", "h'"),
                14 => ("P3", "h'"),
                15 => ("P+", "h'"),
                _ => ("P1", "h"),
            };
            let r2 = Biv::new(alg).g(b1.clone(), mom, lor).done();
            let plan = vec![
                abelian("F''", &[(b1.clone(), gen(alg, lor), gen(alg, mom))]),
                momenta_factor("F'", alg),
            ];
            (
                vec![
                    piece("r'", momenta_bivector(alg), PieceKind::Abelian),
                    piece("r''", r2, PieceKind::Abelian),
                ],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        17 => {
            let d = JordanianData {
                x0: el(&[(int(1), "h"), (ratio(&a2, &b1), "P1")]),
                y0: gen(alg, "P+"),
                pairs: vec![],
                xi: b1.clone(),
            };
            let r2 = Biv::new(alg).g(a1.clone(), "P1", "P2").done();
            let mut plan =
                vec![abelian("F''", &[(a1.clone(), gen(alg, "P2"), gen(alg, "P1"))])];
            plan.extend(jordanian_factors(&d, ("F'_1", "F'")));
            (
                vec![jpiece("r'", d), piece("r''", r2, PieceKind::Abelian)],
                vec![claim(&[0], 1), claim(&[1], 0)],
                Plan::Twist(plan),
            )
        }
        18 => {
            let d = JordanianData {
                x0: el(&[(int(1), "h"), (ratio(&b2, &b1), "h'")]),
                y0: gen(alg, "P+"),
                pairs: vec![],
                xi: b1.clone(),
            };
            let r1 = Biv::new(alg).g(a.clone(), "P1", "P2").done();
            let mut plan = jordanian_factors(&d, ("F''_1", "F''"));
            plan.push(abelian("F'", &[(a.clone(), gen(alg, "P2"), gen(alg, "P1"))]));
            (
                vec![piece("r'", r1, PieceKind::Abelian), jpiece("r''", d)],
                vec![claim(&[0], 1)],
                Plan::Twist(plan),
            )
        }
        19 => {
            let r = Biv::new(alg).g(a.clone(), "P1", "P+").done();
            let plan = vec![abelian("F", &[(a.clone(), gen(alg, "P+"), gen(alg, "P1"))])];
            (vec![piece("r", r, PieceKind::Abelian)], vec![], Plan::Twist(plan))
        }
        20 => {
            let r = Biv::new(alg).g(a.clone(), "P1", "P2").done();
            let plan = vec![abelian("F", &[(a.clone(), gen(alg, "P2"), gen(alg, "P1"))])];
            (vec![piece("r", r, PieceKind::Abelian)], vec![], Plan::Twist(plan))
        }
        21 => (
            vec![piece("r", momenta_bivector(alg), PieceKind::Abelian)],
            vec![],
            Plan::Twist(vec![momenta_factor("F", alg)]),
        ),
        _ => return Err(Error::UnknownEntry(format!("P{n}"))),
    };
    let r = poincare_r(n)?;
    Ok(CatalogEntry { id: EntryId::Poincare(n), algebra: al, r, expected, pieces, claims, plan })
}

/// `exp((β2/β1) h'∧σ+)`.
fn abelian_series_hprime(alg: &Algebra, b1: &Scalar, b2: &Scalar, sp: &Series) -> FactorRecipe {
    FactorRecipe::new("F'''", FactorKind::Jordanian).wedge(
        ratio(b2, b1),
        lie(gen(alg, "h'")),
        sp.clone(),
    )
}

fn tilde12_r(alg: &Algebra, with_alpha2: bool) -> Bivector {
    let mut tail = vec![(p("alpha"), "P+"), (p("alpha1"), "P1")];
    if with_alpha2 {
        tail.push((p("alpha2"), "P2"));
    }
    let y = lin(alg, &tail);
    let r = Biv::new(alg).g(p("beta1"), "P+", "e+").g(p("alphat"), "P+", "P2").done();
    &r + &Bivector::wedge(&gen(alg, "P-"), &y).expect("same algebra")
}

/// The Poincaré r-matrices as listed, row 9 in its modified form.
pub fn poincare_r(n: u8) -> Result<Bivector> {
    let al = poincare();
    let alg = &al;
    let (a, at, a1, a2) = (p("alpha"), p("alphat"), p("alpha1"), p("alpha2"));
    let (b1, b2, g, chi) = (p("beta1"), p("beta2"), p("gamma"), p("chi"));
    let el = |t: &[(Scalar, &str)]| lin(alg, t);
    let r = match n {
        1 => Biv::new(alg)
            .g(g, "h'", "h")
            .g(a, "P+", "P-")
            .g(at, "P1", "P2")
            .done(),
        2 | 7 => {
            let mut r = b_pplus(alg).scale(&b1);
            r = &r + &Biv::new(alg).g(b2, "P+", "h'").done();
            if n == 2 {
                r = &r + &Biv::new(alg).g(g, "e'+", "e+").done();
            }
            r
        }
        3 => &(&b_pplus(alg).scale(&b1) + &Biv::new(alg).g(g, "e'+", "e+").done())
            + &Biv::new(alg).g(a, "P+", "P1").done(),
        4 => {
            let c = Biv::new(alg)
                .g(int(1), "e'+", "e+")
                .g(b1.clone(), "P1", "e+")
                .g(b1.clone(), "P2", "e'+")
                .g(b1.mul(&b1).neg(), "P1", "P2")
                .done()
                .scale(&g);
            &c + &Bivector::wedge(&gen(alg, "P+"), &el(&[(a1, "P1"), (a2, "P2")]))?
        }
        5 => lorentz_r(2, Reality::Real)?.embed(alg)?,
        6 => &(&Biv::new(alg).g(g, "h", "e+").done() + &b_p2(alg).scale(&b1))
            + &Biv::new(alg).g(b2, "P2", "e+").done(),
        8 => &b_pplus(alg).scale(&b1) + &Biv::new(alg).g(b2, "P+", "e+").done(),
        9 => {
            let u = el(&[(b1.clone(), "e+"), (b2, "e'+")]);
            let v = &gen(alg, "h").scale(&b1) + &u.scale(&chi);
            let r = &Bivector::wedge(&gen(alg, "P1"), &u)? + &Bivector::wedge(&gen(alg, "P+"), &v)?;
            &r + &Biv::new(alg).g(a, "P+", "P2").done()
        }
        10 => Biv::new(alg)
            .g(b1.clone(), "P1", "e'+")
            .g(b1, "P+", "e+")
            .g(a1, "P-", "P1")
            .g(a2, "P+", "P2")
            .done(),
        11 => Biv::new(alg).g(b1, "P2", "e+").g(a1, "P+", "P1").g(a2, "P-", "P2").done(),
        12 => tilde12_r(alg, false),
        13..=16 => {
            let (mom, lor) = match n {
                13 => ("P0", "h'"),
                14 => ("P3", "h'"),
                15 => ("P+", "h'"),
                _ => ("P1", "h"),
            };
            &Biv::new(alg).g(b1, mom, lor).done() + &momenta_bivector(alg)
        }
        17 => Biv::new(alg).g(b1, "P+", "h").g(a1, "P1", "P2").g(a2, "P+", "P1").done(),
        18 => &Bivector::wedge(&gen(alg, "P+"), &el(&[(b1, "h"), (b2, "h'")]))?
            + &Biv::new(alg).g(a, "P1", "P2").done(),
        19 => Biv::new(alg).g(a, "P1", "P+").done(),
        20 => Biv::new(alg).g(a, "P1", "P2").done(),
        21 => momenta_bivector(alg),
        _ => return Err(Error::UnknownEntry(format!("P{n}"))),
    };
    Ok(r)
}

/// The unmodified ninth row, `P1∧(β1e+ + β2e'+) + β1P+∧(h + χe+) + αP+∧P2`.
pub fn tilde9_r() -> Bivector {
    let al = poincare();
    let alg = &al;
    let (a, b1, b2, chi) = (p("alpha"), p("beta1"), p("beta2"), p("chi"));
    let u = lin(alg, &[(b1.clone(), "e+"), (b2, "e'+")]);
    let v = lin(alg, &[(b1.clone(), "h"), (b1.mul(&chi), "e+")]);
    let r = &Bivector::wedge(&gen(alg, "P1"), &u).expect("poincare")
        + &Bivector::wedge(&gen(alg, "P+"), &v).expect("poincare");
    &r + &Biv::new(alg).g(a, "P+", "P2").done()
}

fn variant_entry(id: EntryId) -> CatalogEntry {
    let al = poincare();
    let (r, expected, why) = match id {
        EntryId::Tilde9 => (tilde9_r(), Expected::ReportOnly, "superseded by the modified row"),
        _ => (tilde12_r(&al, true), Expected::NotCYBE, "not an r-matrix for alpha2 != 0"),
    };
    CatalogEntry {
        id,
        algebra: al,
        pieces: vec![piece("r", r.clone(), PieceKind::Other)],
        r,
        expected,
        claims: vec![],
        plan: Plan::None(why),
    }
}

/// Builds a catalog entry with symbolic parameters.
pub fn entry(id: EntryId) -> Result<CatalogEntry> {
    match id {
        EntryId::Lorentz(j) => lorentz_entry(j),
        EntryId::Poincare(n) => poincare_entry(n),
        EntryId::Tilde9 | EntryId::Tilde12 => Ok(variant_entry(id)),
    }
}

/// Every entry in [`EntryId::all`] order.
pub fn all_entries() -> Vec<CatalogEntry> {
    EntryId::all().into_iter().map(|id| entry(id).expect("catalog entry")).collect()
}

/// Stable text dump of the whole catalog.
pub fn dump_all() -> String {
    all_entries().iter().map(|e| e.dump()).collect::<Vec<_>>().join("\n")
}
