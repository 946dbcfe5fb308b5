use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use twistforge::catalog::{entry, tilde9_r, CatalogEntry, EntryId, Expected, PieceKind};
use twistforge::rmatrix::{
    check_decomposition_conditions, cybe_classify, is_abelian_type, is_subordinated,
    verify_jordanian_data, Bivector, CybeKind,
};
use twistforge::scalars::KNOWN_PARAMS;
use twistforge::twist::{
    build_entry_twist, cocycle_check, counit_check, local_r_symmetry_check, omega_conjugate,
    Symmetry, DEFAULT_ORDER,
};
use twistforge::{Error, GaussianRational, ParamSymbol, Reality, Result, Scalar, SpecializationMap};

use crate::report::{CheckRecord, Report, Verdict};

/// Environment variable that overrides the default truncation order.
pub const ORDER_ENV: &str = "TWISTFORGE_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Cybe,
    Zakrzewski,
    Subordination,
    Jordanian,
    Cocycle,
    LocalSymmetry,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Cybe,
        CheckKind::Zakrzewski,
        CheckKind::Subordination,
        CheckKind::Jordanian,
        CheckKind::Cocycle,
        CheckKind::LocalSymmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Cybe => "cybe",
            CheckKind::Zakrzewski => "zakrzewski",
            CheckKind::Subordination => "subordination",
            CheckKind::Jordanian => "jordanian",
            CheckKind::Cocycle => "cocycle",
            CheckKind::LocalSymmetry => "local-symmetry",
        }
    }
}

/// Truncation order and parameter values shared by every check of a run.
#[derive(Clone, Debug)]
pub struct Settings {
    pub order: usize,
    pub map: SpecializationMap,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { order: DEFAULT_ORDER, map: SpecializationMap::default() }
    }
}

impl Settings {
    /// Order from the flag, else from the environment, else the default.
    pub fn resolve_order(flag: Option<usize>) -> Result<usize> {
        if let Some(n) = flag {
            return Ok(n);
        }
        match std::env::var(ORDER_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{ORDER_ENV}={v} is not an order"))),
            Err(_) => Ok(DEFAULT_ORDER),
        }
    }

    /// Applies `name=value` overrides on top of the default constants.
    pub fn with_params(order: usize, overrides: &[String]) -> Result<Self> {
        let mut map = SpecializationMap::default();
        for o in overrides {
            let (k, v) = o
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("`{o}` is not of the form name=value")))?;
            let k = k.trim();
            if !KNOWN_PARAMS.contains(&k) {
                return Err(Error::Parse(format!("unknown parameter `{k}`")));
            }
            map.set(k, GaussianRational::from_str(v.trim())?)?;
        }
        Ok(Settings { order, map })
    }

    fn values(&self, e: &CatalogEntry) -> BTreeMap<String, String> {
        e.params()
            .iter()
            .map(|p| {
                let name = p.name();
                let v = self.map.get(&name).map(|(_, c)| c.to_string()).unwrap_or_default();
                (name, v)
            })
            .collect()
    }
}

fn symbolic(e: &CatalogEntry) -> BTreeMap<String, String> {
    e.params().iter().map(|p| (p.name(), "symbolic".to_string())).collect()
}

fn record(e: &CatalogEntry, kind: CheckKind, verdict: Verdict, detail: String) -> CheckRecord {
    CheckRecord {
        id: e.id.to_string(),
        check: kind.name().to_string(),
        verdict,
        order: None,
        witness: None,
        params: symbolic(e),
        detail,
    }
}

fn expected_kind(e: Expected) -> Option<CybeKind> {
    match e {
        Expected::Homogeneous => Some(CybeKind::Homogeneous),
        Expected::Modified => Some(CybeKind::Modified),
        Expected::NotCYBE => Some(CybeKind::NotCYBE),
        Expected::ReportOnly => None,
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn check_cybe(e: &CatalogEntry) -> Result<CheckRecord> {
    let v = cybe_classify(&e.r)?;
    let (verdict, detail) = match expected_kind(e.expected) {
        Some(k) if k == v.kind => (Verdict::Pass, format!("{}", v.kind)),
        Some(k) => (Verdict::Fail, format!("computed {}, expected {k}", v.kind)),
        None => (Verdict::ReportOnly, format!("computed {}", v.kind)),
    };
    let mut r = record(e, CheckKind::Cybe, verdict, detail);
    if v.kind != CybeKind::Homogeneous {
        r.witness = Some(format!("[[r,r]] = {}", v.omega));
    }
    Ok(r)
}

/// The conditions expected to fail for an entry; only the α₂ ≠ 0 variant of
/// row 12 has one.
fn expected_condition_failures(id: EntryId) -> &'static [&'static str] {
    match id {
        EntryId::Tilde12 => &["ab"],
        _ => &[],
    }
}

pub fn check_zakrzewski(e: &CatalogEntry) -> Result<CheckRecord> {
    if !matches!(e.id, EntryId::Poincare(_) | EntryId::Tilde9 | EntryId::Tilde12) {
        return Ok(record(
            e,
            CheckKind::Zakrzewski,
            Verdict::ReportOnly,
            "not a Poincare entry".into(),
        ));
    }
    let rep = check_decomposition_conditions(&e.r)?;
    let verdicts = rep.verdicts();
    let failing: Vec<&str> = verdicts.iter().filter(|(_, b)| !b).map(|(n, _)| *n).collect();
    let detail = verdicts.iter().map(|(n, b)| format!("{n}={}", ok(*b))).collect::<Vec<_>>().join(" ");
    let verdict = if e.expected == Expected::ReportOnly {
        Verdict::ReportOnly
    } else if failing == expected_condition_failures(e.id) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut r = record(e, CheckKind::Zakrzewski, verdict, detail);
    if !rep.ab_vanishes {
        r.witness = Some(format!("[[a,b]] = {}", rep.ab));
    } else if !rep.omega_invariant {
        r.witness = Some(format!("2[[a,c]] + [[b,b]] = {}", rep.omega));
    }
    Ok(r)
}

pub fn check_subordination(e: &CatalogEntry) -> Result<CheckRecord> {
    let all: Vec<usize> = (0..e.pieces.len()).collect();
    let sum_ok = e.piece_sum(&all)? == e.r;
    let mut parts = vec![format!("sum={}", ok(sum_ok))];
    let mut asserted_ok = sum_ok;
    let mut asserted = 0;
    for c in &e.claims {
        let left = e.piece_sum(&c.left)?;
        let holds = is_subordinated(&left, &e.pieces[c.right].r)?;
        let names: Vec<&str> = c.left.iter().map(|&i| e.pieces[i].name.as_str()).collect();
        let tag = if c.asserted { "" } else { " (reported)" };
        parts.push(format!("{} > {}: {}{tag}", names.join("+"), e.pieces[c.right].name, ok(holds)));
        if c.asserted {
            asserted += 1;
            asserted_ok &= holds;
        }
    }
    let verdict = if !asserted_ok {
        Verdict::Fail
    } else if asserted == 0 && !e.claims.is_empty() {
        Verdict::ReportOnly
    } else {
        Verdict::Pass
    };
    Ok(record(e, CheckKind::Subordination, verdict, parts.join("; ")))
}

pub fn check_jordanian(e: &CatalogEntry) -> Result<CheckRecord> {
    let mut parts = Vec::new();
    let mut all_ok = true;
    let mut witness = None;
    for p in &e.pieces {
        match (p.kind, &p.jordanian) {
            (PieceKind::Jordanian, Some(d)) => {
                let rep = verify_jordanian_data(d, &p.r)?;
                parts.push(format!("{} jordanian: {}", p.name, ok(rep.passed())));
                if let Some(first) = rep.first() {
                    witness.get_or_insert_with(|| first.to_string());
                }
                all_ok &= rep.passed();
            }
            (PieceKind::Abelian, _) => {
                let b = is_abelian_type(&p.r)?;
                parts.push(format!("{} abelian: {}", p.name, ok(b)));
                all_ok &= b;
            }
            _ => {}
        }
    }
    let verdict = match (parts.is_empty(), all_ok) {
        (true, _) => Verdict::ReportOnly,
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::Fail,
    };
    if parts.is_empty() {
        parts.push("no typed pieces".into());
    }
    let mut r = record(e, CheckKind::Jordanian, verdict, parts.join("; "));
    r.witness = witness;
    Ok(r)
}

pub fn check_cocycle(e: &CatalogEntry, s: &Settings) -> Result<CheckRecord> {
    if e.resolved_twist()?.is_none() {
        return Ok(record(e, CheckKind::Cocycle, Verdict::ReportOnly, "no twist".into()));
    }
    let f = build_entry_twist(e, &s.map, s.order)?;
    let c = cocycle_check(&f)?;
    let unital = counit_check(&f.value)?;
    let verdict = if c.passed() && unital { Verdict::Pass } else { Verdict::Fail };
    let cocycle = match c.first_failure {
        None => "cocycle ok".to_string(),
        Some(d) => format!("cocycle fails at degree {d}"),
    };
    let labels: Vec<&str> = f.factors.iter().map(|x| x.label.as_str()).collect();
    let detail = format!("F = {}; {cocycle}; counit {}", labels.join(" "), ok(unital));
    let mut r = record(e, CheckKind::Cocycle, verdict, detail);
    r.order = Some(s.order);
    r.params = s.values(e);
    r.witness = c.witness;
    Ok(r)
}

fn symmetry_text(s: &Symmetry) -> String {
    match s {
        Symmetry::Symmetric(c) => format!("symmetric (c = {c})"),
        Symmetry::NotSymmetric => "not symmetric".into(),
    }
}

/// Local r-symmetry of the twist and of its ω-conjugate; a property
/// report, never a failure.
pub fn check_local_symmetry(e: &CatalogEntry, s: &Settings) -> Result<CheckRecord> {
    if e.resolved_twist()?.is_none() {
        return Ok(record(e, CheckKind::LocalSymmetry, Verdict::ReportOnly, "no twist".into()));
    }
    let order = s.order.max(1);
    let f = build_entry_twist(e, &s.map, order)?;
    let plain = local_r_symmetry_check(&f.value, &e.r, &s.map)?;
    let conj = local_r_symmetry_check(&omega_conjugate(&f.value)?, &e.r, &s.map)?;
    let detail = format!("F: {}; omega-conjugate: {}", symmetry_text(&plain), symmetry_text(&conj));
    let mut r = record(e, CheckKind::LocalSymmetry, Verdict::ReportOnly, detail);
    r.order = Some(order);
    r.params = s.values(e);
    Ok(r)
}

pub fn run_check(kind: CheckKind, e: &CatalogEntry, s: &Settings) -> Result<CheckRecord> {
    match kind {
        CheckKind::Cybe => check_cybe(e),
        CheckKind::Zakrzewski => check_zakrzewski(e),
        CheckKind::Subordination => check_subordination(e),
        CheckKind::Jordanian => check_jordanian(e),
        CheckKind::Cocycle => check_cocycle(e, s),
        CheckKind::LocalSymmetry => check_local_symmetry(e, s),
    }
}

/// Runs every (check, entry) pair in parallel; the report lists checks in
/// the given order and entries in catalog order.
pub fn run_checks(kinds: &[CheckKind], ids: &[EntryId], s: &Settings) -> Result<Report> {
    let entries: Vec<CatalogEntry> = ids.iter().map(|&id| entry(id)).collect::<Result<_>>()?;
    let jobs: Vec<(CheckKind, &CatalogEntry)> =
        kinds.iter().flat_map(|&k| entries.iter().map(move |e| (k, e))).collect();
    let results: Vec<(CheckRecord, std::time::Duration)> = jobs
        .par_iter()
        .map(|&(k, e)| {
            let t = Instant::now();
            let r = run_check(k, e, s)?;
            Ok((r, t.elapsed()))
        })
        .collect::<Result<_>>()?;
    let mut report = Report::default();
    for (r, t) in results {
        report.push(r, t);
    }
    Ok(report)
}

/// The unmodified ninth row with χ fixed to a value: CYBE type and the
/// four decomposition conditions, reported without expectation.
pub fn probe_tilde9(chi: &Scalar) -> Result<Report> {
    let chi_sym = ParamSymbol::new("chi", Reality::Real);
    let r: Bivector = tilde9_r().map_coeffs(|c| c.substitute(chi_sym, chi))?;
    let mut params: BTreeMap<String, String> = BTreeMap::new();
    for (_, c) in r.terms() {
        for p in c.vars() {
            params.insert(p.name(), "symbolic".into());
        }
    }
    params.insert("chi".into(), chi.to_string());
    let mut report = Report::default();

    let t = Instant::now();
    let v = cybe_classify(&r)?;
    report.push(
        CheckRecord {
            id: "tilde9".into(),
            check: "cybe".into(),
            verdict: Verdict::ReportOnly,
            order: None,
            witness: (v.kind != CybeKind::Homogeneous).then(|| format!("[[r,r]] = {}", v.omega)),
            params: params.clone(),
            detail: format!("computed {}", v.kind),
        },
        t.elapsed(),
    );

    let t = Instant::now();
    let rep = check_decomposition_conditions(&r)?;
    let detail =
        rep.verdicts().iter().map(|(n, b)| format!("{n}={}", ok(*b))).collect::<Vec<_>>().join(" ");
    report.push(
        CheckRecord {
            id: "tilde9".into(),
            check: "zakrzewski".into(),
            verdict: Verdict::ReportOnly,
            order: None,
            witness: (!rep.omega.is_zero()).then(|| format!("2[[a,c]] + [[b,b]] = {}", rep.omega)),
            params,
            detail,
        },
        t.elapsed(),
    );
    Ok(report)
}
