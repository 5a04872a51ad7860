//! Census statistics and the consistency checks run against a full census.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::census::{Census, FillingRecord};
use crate::cusp::{enumerate_short_slopes, slope_length, CuspTranslations, LENGTH_TOLERANCE};
use crate::description::ManifoldDescription;
use crate::seifert::BaseSurface;
use crate::slope::{distance, is_integral, Slope};
use crate::taxonomy::{PrimeKind, TypeLabel};

pub const TOTAL_FILLINGS: usize = 205_822;
pub const SPHERICAL_FILLINGS: usize = 59_200;
pub const KNOT_EXTERIORS: usize = 1_267;
pub const KNOT_FILLINGS: usize = 2_615;
pub const KNOT_LENS_FILLINGS: usize = 178;
pub const KNOT_SEIFERT_FILLINGS: usize = 1_143;
pub const TWO_SUM_MANIFOLDS: usize = 14;
pub const MAX_E: usize = 10;
pub const MAX_DELTA: u64 = 8;
pub const SHORT_SLOPES: usize = 355_128;
pub const NON_EXCEPTIONAL_SHORT_SLOPES: usize = 149_306;
pub const SHORT_SLOPE_TOLERANCE: f64 = 0.01;
pub const SIX_THEOREM_BOUND: f64 = 6.0;

pub const HIGH_E_MANIFOLDS: [&str; 11] =
    ["m003", "m004", "m006", "m007", "m009", "m016", "m017", "m023", "m035", "m038", "m039"];
pub const THREE_SUMMAND_FILLINGS: [&str; 3] = ["o9_39343", "o9_41447", "o9_43255"];
pub const FINITE_NONABELIAN_TRIPLES: [&str; 4] = ["m011", "s757", "v2702", "v2797"];
pub const FOUR_TOROIDAL_MANIFOLDS: [&str; 27] = [
    "s772", "s778", "s911", "v2640", "t08282", "t11538", "t12033", "t12035", "t12036", "t12041", "t12043",
    "t12045", "t12050", "t12548", "t12648", "o9_35259", "o9_36732", "o9_37030", "o9_38039", "o9_39094",
    "o9_40054", "o9_41000", "o9_41004", "o9_41006", "o9_41007", "o9_41008", "o9_43799",
];
/// Manifolds with a pair of exceptional slopes at distance at least 5.
pub const DELTA_FIVE_COUNT: usize = 4;
pub const LONGEST_LENS: (&str, (i64, i64), f64) = ("o9_18855", (1, 1), 3.92794);
pub const LENGTH_PIN_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticsError {
    #[error("no cusp translations for manifold {0}")]
    MissingTranslations(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub manifold: String,
    pub slope: Slope,
}

impl Witness {
    fn of(f: &FillingRecord) -> Witness {
        Witness { manifold: f.manifold.clone(), slope: f.slope.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub passed: bool,
    pub observed: Value,
    pub expected: Value,
    pub witnesses: Vec<Witness>,
}

impl CheckResult {
    fn new(id: &str, passed: bool, observed: Value, expected: Value, mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort();
        witnesses.dedup();
        CheckResult { check_id: id.to_string(), passed, observed, expected, witnesses }
    }
}

/// `e(M)` for every manifold, including those with no fillings.
pub fn exceptional_counts(c: &Census) -> BTreeMap<&str, usize> {
    let mut out: BTreeMap<&str, usize> = c.manifolds.keys().map(|k| (k.as_str(), 0)).collect();
    for f in &c.fillings {
        *out.entry(f.manifold.as_str()).or_default() += 1;
    }
    out
}

pub fn e_histogram(c: &Census) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for e in exceptional_counts(c).into_values() {
        *h.entry(e).or_default() += 1;
    }
    h
}

pub fn type_table(c: &Census) -> BTreeMap<TypeLabel, usize> {
    let mut t = BTreeMap::new();
    for f in &c.fillings {
        *t.entry(f.classification.label).or_default() += 1;
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaWitness {
    pub manifold: String,
    pub a: Slope,
    pub b: Slope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaExtreme {
    pub max: u64,
    pub witnesses: Vec<DeltaWitness>,
}

fn delta(a: &Slope, b: &Slope) -> u64 {
    distance(a, b).to_u64().unwrap_or(u64::MAX)
}

/// Largest distance between exceptional slopes for each unordered pair of
/// types, keyed with the smaller label first.
pub fn delta_extremes(c: &Census) -> BTreeMap<(TypeLabel, TypeLabel), DeltaExtreme> {
    let mut out: BTreeMap<(TypeLabel, TypeLabel), DeltaExtreme> = BTreeMap::new();
    for fs in c.fillings_by_manifold().into_values() {
        for (i, f) in fs.iter().enumerate() {
            for g in &fs[i + 1..] {
                let (x, y) = (f.classification.label, g.classification.label);
                let (key, (a, b)) = if x <= y { ((x, y), (f, g)) } else { ((y, x), (g, f)) };
                let d = delta(&a.slope, &b.slope);
                let w = DeltaWitness { manifold: a.manifold.clone(), a: a.slope.clone(), b: b.slope.clone() };
                let entry = out.entry(key).or_insert(DeltaExtreme { max: d, witnesses: Vec::new() });
                if d > entry.max {
                    entry.max = d;
                    entry.witnesses.clear();
                }
                if d == entry.max {
                    entry.witnesses.push(w);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LengthExtreme {
    pub max: f64,
    pub witnesses: Vec<Witness>,
}

fn translations<'a>(c: &'a Census, name: &str) -> Result<&'a CuspTranslations, AnalyticsError> {
    c.manifolds
        .get(name)
        .map(|r| &r.translations)
        .ok_or_else(|| AnalyticsError::MissingTranslations(name.to_string()))
}

pub fn filling_length(c: &Census, f: &FillingRecord) -> Result<f64, AnalyticsError> {
    Ok(slope_length(translations(c, &f.manifold)?, &f.slope))
}

/// Longest exceptional slope of each type; ties within `1e-9` share the
/// maximum.
pub fn longest_slopes(c: &Census) -> Result<BTreeMap<TypeLabel, LengthExtreme>, AnalyticsError> {
    let mut out: BTreeMap<TypeLabel, LengthExtreme> = BTreeMap::new();
    for f in &c.fillings {
        let len = filling_length(c, f)?;
        let e = out.entry(f.classification.label).or_insert(LengthExtreme { max: len, witnesses: Vec::new() });
        if len > e.max + LENGTH_TOLERANCE {
            e.max = len;
            e.witnesses.clear();
        }
        if (len - e.max).abs() <= LENGTH_TOLERANCE {
            e.max = e.max.max(len);
            e.witnesses.push(Witness::of(f));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UncoveredSlope {
    pub manifold: String,
    pub slope: Slope,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShortSlopeAudit {
    pub bound: f64,
    pub total: usize,
    pub exceptional: usize,
    pub non_exceptional: usize,
    pub per_manifold: BTreeMap<String, usize>,
    /// Exceptional slopes longer than the bound.
    pub uncovered: Vec<UncoveredSlope>,
}

pub fn short_slope_audit(c: &Census, bound: f64) -> Result<ShortSlopeAudit, AnalyticsError> {
    let by_manifold = c.fillings_by_manifold();
    let empty = Vec::new();
    let per: Vec<(String, usize, usize, Vec<UncoveredSlope>)> = c
        .manifolds
        .par_iter()
        .map(|(name, rec)| {
            let short: BTreeSet<Slope> = enumerate_short_slopes(&rec.translations, bound).into_iter().collect();
            let fills = by_manifold.get(name.as_str()).unwrap_or(&empty);
            let mut hit = 0;
            let mut uncovered = Vec::new();
            for f in fills {
                if short.contains(&f.slope) {
                    hit += 1;
                } else {
                    uncovered.push(UncoveredSlope {
                        manifold: name.clone(),
                        slope: f.slope.clone(),
                        length: slope_length(&rec.translations, &f.slope),
                    });
                }
            }
            (name.clone(), short.len(), hit, uncovered)
        })
        .collect();
    for name in by_manifold.keys() {
        translations(c, name)?;
    }
    let mut audit = ShortSlopeAudit {
        bound,
        total: 0,
        exceptional: 0,
        non_exceptional: 0,
        per_manifold: BTreeMap::new(),
        uncovered: Vec::new(),
    };
    for (name, n, hit, unc) in per {
        audit.total += n;
        audit.exceptional += hit;
        audit.non_exceptional += n - hit;
        audit.per_manifold.insert(name, n);
        audit.uncovered.extend(unc);
    }
    audit.uncovered.sort_by(|a, b| (&a.manifold, &a.slope).cmp(&(&b.manifold, &b.slope)));
    Ok(audit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Knots,
    Sums,
    Slopes,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "knots" => Ok(Suite::Knots),
            "sums" => Ok(Suite::Sums),
            "slopes" => Ok(Suite::Slopes),
            other => Err(format!("unknown suite {other:?}; expected all, knots, sums or slopes")),
        }
    }
}

/// The slope filled to get S3 from a knot exterior, `(1,0)` when the
/// census has no S3 row for it.
pub fn knot_meridian(fillings: &[&FillingRecord]) -> Slope {
    fillings
        .iter()
        .find(|f| f.classification.label == TypeLabel::S3)
        .map_or_else(Slope::meridian, |f| f.slope.clone())
}

fn names(list: &[&str]) -> BTreeSet<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn set_json(s: &BTreeSet<String>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn witnesses_for(by: &BTreeMap<&str, Vec<&FillingRecord>>, ms: &BTreeSet<String>, keep: impl Fn(&FillingRecord) -> bool) -> Vec<Witness> {
    ms.iter()
        .flat_map(|m| by.get(m.as_str()).into_iter().flatten())
        .filter(|f| keep(f))
        .map(|f| Witness::of(f))
        .collect()
}

/// Lens summands `RP3`, `L(3,1)`, `L(4,1)`: the only lens spaces of orders 2, 3, 4.
fn has_small_lens_summand(f: &FillingRecord) -> bool {
    f.classification.kinds.iter().any(|k| matches!(k, PrimeKind::Lens { p: 2..=4, .. }))
}

/// Seifert data over S2 with at most three exceptional fibers or over RP2
/// with at most two; lens spaces and S3 qualify.
fn has_small_base_form(d: &ManifoldDescription) -> bool {
    match d {
        ManifoldDescription::Seifert(sd) => {
            (sd.base == BaseSurface::S2 && sd.exceptional_count() <= 3)
                || (sd.base == BaseSurface::RP2 && sd.exceptional_count() <= 2)
        }
        ManifoldDescription::Lens(_) | ManifoldDescription::Named(_) => true,
        _ => false,
    }
}

fn knot_checks(c: &Census, by: &BTreeMap<&str, Vec<&FillingRecord>>) -> Vec<CheckResult> {
    let knots: Vec<&str> = c.manifolds.values().filter(|r| r.knot_exterior).map(|r| r.name.as_str()).collect();
    let mut nontrivial: Vec<(&FillingRecord, Slope)> = Vec::new();
    for k in &knots {
        let fs = by.get(k).cloned().unwrap_or_default();
        let meridian = knot_meridian(&fs);
        nontrivial.extend(fs.into_iter().filter(|f| f.slope != meridian).map(|f| (f, meridian.clone())));
    }
    let mut out = vec![
        CheckResult::new("knots.count", knots.len() == KNOT_EXTERIORS, json!(knots.len()), json!(KNOT_EXTERIORS), vec![]),
        CheckResult::new(
            "knots.total",
            nontrivial.len() == KNOT_FILLINGS,
            json!(nontrivial.len()),
            json!(KNOT_FILLINGS),
            vec![],
        ),
    ];
    let sums: Vec<Witness> = nontrivial
        .iter()
        .filter(|(f, _)| f.classification.properties.is_connected_sum)
        .map(|(f, _)| Witness::of(f))
        .collect();
    out.push(CheckResult::new("knots.cabling", sums.is_empty(), json!(sums.len()), json!(0), sums));
    let lens = nontrivial.iter().filter(|(f, _)| f.classification.label == TypeLabel::LensSpace).count();
    out.push(CheckResult::new("knots.lens", lens == KNOT_LENS_FILLINGS, json!(lens), json!(KNOT_LENS_FILLINGS), vec![]));
    let seifert: Vec<_> = nontrivial.iter().filter(|(f, _)| f.classification.properties.is_seifert).collect();
    let bad: Vec<Witness> = seifert
        .iter()
        .filter(|(f, m)| !is_integral(&f.slope, m) || !has_small_base_form(&f.description))
        .map(|(f, _)| Witness::of(f))
        .collect();
    out.push(CheckResult::new(
        "knots.sfs_integral",
        seifert.len() == KNOT_SEIFERT_FILLINGS && bad.is_empty(),
        json!({ "seifert": seifert.len(), "violations": bad.len() }),
        json!({ "seifert": KNOT_SEIFERT_FILLINGS, "violations": 0 }),
        bad,
    ));
    out
}

fn s2xs1_check(c: &Census, by: &BTreeMap<&str, Vec<&FillingRecord>>) -> CheckResult {
    let hosts: BTreeSet<String> = c
        .fillings
        .iter()
        .filter(|f| f.classification.label == TypeLabel::S2xS1)
        .map(|f| f.manifold.clone())
        .collect();
    let bad = witnesses_for(by, &hosts, |f| f.classification.properties.is_connected_sum);
    CheckResult::new(
        "s2xs1.cabling",
        bad.is_empty(),
        json!({ "s2xs1_knot_exteriors": hosts.len(), "connected_sums": bad.len() }),
        json!({ "connected_sums": 0 }),
        bad,
    )
}

fn sum_checks(by: &BTreeMap<&str, Vec<&FillingRecord>>) -> Vec<CheckResult> {
    let sum_counts: BTreeMap<&str, usize> = by
        .iter()
        .map(|(m, fs)| (*m, fs.iter().filter(|f| f.classification.properties.is_connected_sum).count()))
        .filter(|(_, n)| *n > 0)
        .collect();
    let two: BTreeSet<String> = sum_counts.iter().filter(|(_, n)| **n == 2).map(|(m, _)| m.to_string()).collect();
    let more: BTreeSet<String> = sum_counts.iter().filter(|(_, n)| **n > 2).map(|(m, _)| m.to_string()).collect();
    let max = sum_counts.values().copied().max().unwrap_or(0);
    let is_sum = |f: &FillingRecord| f.classification.properties.is_connected_sum;
    let mut out = vec![CheckResult::new(
        "sums.two",
        two.len() == TWO_SUM_MANIFOLDS && more.is_empty(),
        json!({ "two_sum_manifolds": two.len(), "max_sums": max }),
        json!({ "two_sum_manifolds": TWO_SUM_MANIFOLDS, "max_sums": 2 }),
        witnesses_for(by, &more, is_sum),
    )];
    let bad = witnesses_for(by, &two, |f| is_sum(f) && !has_small_lens_summand(f));
    out.push(CheckResult::new(
        "sums.summand",
        bad.is_empty(),
        json!({ "checked": two.len(), "violations": bad.len() }),
        json!({ "violations": 0 }),
        bad,
    ));
    let three: Vec<Witness> = by
        .values()
        .flatten()
        .filter(|f| f.classification.kinds.len() >= 3)
        .map(|f| Witness::of(f))
        .collect();
    let expected: Vec<Witness> = THREE_SUMMAND_FILLINGS
        .iter()
        .map(|m| Witness { manifold: m.to_string(), slope: Slope::meridian() })
        .collect();
    let observed: Vec<String> = three.iter().map(|w| format!("{} {}", w.manifold, w.slope)).collect();
    let want: Vec<String> = expected.iter().map(|w| format!("{} {}", w.manifold, w.slope)).collect();
    out.push(CheckResult::new("sums.three", observed == want, json!(observed), json!(want), three));
    out
}

/// Manifolds attaining the maximum per-manifold count of fillings with
/// the property, and that maximum.
fn argmax(by: &BTreeMap<&str, Vec<&FillingRecord>>, keep: impl Fn(&FillingRecord) -> bool) -> (usize, BTreeSet<String>) {
    let counts: Vec<(&str, usize)> = by.iter().map(|(m, fs)| (*m, fs.iter().filter(|f| keep(f)).count())).collect();
    let max = counts.iter().map(|c| c.1).max().unwrap_or(0);
    let at = if max == 0 {
        BTreeSet::new()
    } else {
        counts.iter().filter(|c| c.1 == max).map(|c| c.0.to_string()).collect()
    };
    (max, at)
}

fn maxima_checks(c: &Census, by: &BTreeMap<&str, Vec<&FillingRecord>>) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let nonabelian = |f: &FillingRecord| f.classification.properties.pi1_finite && !f.classification.properties.pi1_cyclic;
    let (max, at) = argmax(by, nonabelian);
    let want = names(&FINITE_NONABELIAN_TRIPLES);
    out.push(CheckResult::new(
        "finite.nonabelian",
        max == 3 && at == want,
        json!({ "max": max, "manifolds": set_json(&at) }),
        json!({ "max": 3, "manifolds": set_json(&want) }),
        witnesses_for(by, &at.symmetric_difference(&want).cloned().collect(), nonabelian),
    ));
    let toroidal = |f: &FillingRecord| f.classification.properties.is_toroidal;
    let (max, at) = argmax(by, toroidal);
    let want = names(&FOUR_TOROIDAL_MANIFOLDS);
    out.push(CheckResult::new(
        "toroidal.max",
        max == 4 && at == want,
        json!({ "max": max, "manifolds": set_json(&at) }),
        json!({ "max": 4, "manifolds": set_json(&want) }),
        witnesses_for(by, &at.symmetric_difference(&want).cloned().collect(), toroidal),
    ));
    let e = exceptional_counts(c);
    let max_e = e.values().copied().max().unwrap_or(0);
    let high: BTreeSet<String> = e.iter().filter(|(_, n)| **n >= 7).map(|(m, _)| m.to_string()).collect();
    let want = names(&HIGH_E_MANIFOLDS);
    out.push(CheckResult::new(
        "emax",
        max_e <= MAX_E && high == want,
        json!({ "max_e": max_e, "e_at_least_7": set_json(&high) }),
        json!({ "max_e_at_most": MAX_E, "e_at_least_7": set_json(&want) }),
        witnesses_for(by, &high.symmetric_difference(&want).cloned().collect(), |_| true),
    ));
    out
}

fn count_checks(c: &Census) -> Vec<CheckResult> {
    let table = type_table(c);
    let spherical: usize = table.iter().filter(|(l, _)| l.is_spherical()).map(|(_, n)| n).sum();
    vec![
        CheckResult::new(
            "total.count",
            c.fillings.len() == TOTAL_FILLINGS,
            json!(c.fillings.len()),
            json!(TOTAL_FILLINGS),
            vec![],
        ),
        CheckResult::new(
            "spherical.count",
            spherical == SPHERICAL_FILLINGS,
            json!(spherical),
            json!(SPHERICAL_FILLINGS),
            vec![],
        ),
    ]
}

fn slope_checks(c: &Census, by: &BTreeMap<&str, Vec<&FillingRecord>>) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let extremes = delta_extremes(c);
    let global = extremes.values().map(|e| e.max).max().unwrap_or(0);
    let over: Vec<Witness> = extremes
        .values()
        .filter(|e| e.max > MAX_DELTA)
        .flat_map(|e| &e.witnesses)
        .map(|w| Witness { manifold: w.manifold.clone(), slope: w.a.clone() })
        .collect();
    out.push(CheckResult::new(
        "delta.bound",
        global > 0 && global <= MAX_DELTA,
        json!(global),
        json!({ "max_at_most": MAX_DELTA }),
        over,
    ));
    let five: BTreeSet<String> = by
        .iter()
        .filter(|(_, fs)| fs.iter().enumerate().any(|(i, f)| fs[i + 1..].iter().any(|g| delta(&f.slope, &g.slope) >= 5)))
        .map(|(m, _)| m.to_string())
        .collect();
    out.push(CheckResult::new(
        "delta.five",
        five.len() == DELTA_FIVE_COUNT,
        json!({ "count": five.len(), "manifolds": set_json(&five) }),
        json!({ "count": DELTA_FIVE_COUNT }),
        vec![],
    ));

    let mut long = Vec::new();
    let mut max_len: f64 = 0.0;
    for f in &c.fillings {
        match filling_length(c, f) {
            Ok(len) => {
                max_len = max_len.max(len);
                if len > SIX_THEOREM_BOUND + LENGTH_TOLERANCE {
                    long.push(Witness::of(f));
                }
            }
            Err(_) => long.push(Witness::of(f)),
        }
    }
    out.push(CheckResult::new(
        "slopes.length",
        !c.fillings.is_empty() && long.is_empty(),
        json!({ "max_length": max_len, "over_bound": long.len() }),
        json!({ "max_length_at_most": SIX_THEOREM_BOUND }),
        long,
    ));

    let (name, (p, q), want) = LONGEST_LENS;
    let lens_max = longest_slopes(c).ok().and_then(|m| m.get(&TypeLabel::LensSpace).cloned());
    let target = Witness { manifold: name.to_string(), slope: Slope::new(p, q).expect("primitive") };
    let (passed, observed, witnesses) = match lens_max {
        Some(e) => (
            (e.max - want).abs() <= LENGTH_PIN_TOLERANCE && e.witnesses.contains(&target),
            json!({ "max_length": e.max, "at": e.witnesses.iter().map(|w| format!("{} {}", w.manifold, w.slope)).collect::<Vec<_>>() }),
            e.witnesses,
        ),
        None => (false, Value::Null, vec![]),
    };
    out.push(CheckResult::new(
        "slopes.lens_max",
        passed,
        observed,
        json!({ "max_length": want, "tolerance": LENGTH_PIN_TOLERANCE, "at": format!("{} {}", target.manifold, target.slope) }),
        witnesses,
    ));

    let observed_audit = short_slope_audit(c, SIX_THEOREM_BOUND).ok();
    let within = |x: usize, want: usize| (x as f64 - want as f64).abs() <= SHORT_SLOPE_TOLERANCE * want as f64;
    let (passed, observed, witnesses) = match observed_audit {
        Some(a) => (
            within(a.total, SHORT_SLOPES) && within(a.non_exceptional, NON_EXCEPTIONAL_SHORT_SLOPES) && a.uncovered.is_empty(),
            json!({ "total": a.total, "non_exceptional": a.non_exceptional, "uncovered": a.uncovered.len() }),
            a.uncovered.iter().map(|u| Witness { manifold: u.manifold.clone(), slope: u.slope.clone() }).collect(),
        ),
        None => (false, Value::Null, vec![]),
    };
    out.push(CheckResult::new(
        "slopes.audit",
        passed,
        observed,
        json!({ "total": SHORT_SLOPES, "non_exceptional": NON_EXCEPTIONAL_SHORT_SLOPES, "relative_tolerance": SHORT_SLOPE_TOLERANCE, "uncovered": 0 }),
        witnesses,
    ));
    out
}

pub fn run_suite(c: &Census, suite: Suite) -> Vec<CheckResult> {
    let by = c.fillings_by_manifold();
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Knots) {
        out.extend(knot_checks(c, &by));
        out.push(s2xs1_check(c, &by));
    }
    if matches!(suite, Suite::All | Suite::Sums) {
        out.extend(sum_checks(&by));
    }
    if suite == Suite::All {
        out.extend(maxima_checks(c, &by));
        out.extend(count_checks(c));
    }
    if matches!(suite, Suite::All | Suite::Slopes) {
        out.extend(slope_checks(c, &by));
    }
    out
}

pub fn conjecture_suite(c: &Census) -> Vec<CheckResult> {
    run_suite(c, Suite::All)
}
