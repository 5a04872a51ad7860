//! Acceptance criteria, one line each. Census criteria read
//! `manifolds.csv` and `fillings.csv` from `CENSUS_DATA_DIR` (default
//! `data/census` at the workspace root).
//!
//! Run with `cargo test -p dehn-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use dehn_core::analytics::{self, CheckResult, Suite};
use dehn_core::census::{load_census, read_census, Census, FILLING_HEADER};
use dehn_core::cusp::{cusp_area, cyclic_cover_translations, enumerate_short_slopes, slope_length, CuspTranslations};
use dehn_core::description::{parse_description, render_description};
use dehn_core::graph::{certify_minimal, GraphDescription, GraphEdge};
use dehn_core::homology::AbelianGroup;
use dehn_core::seifert::{
    euler_number, fiber_swap, first_homology, normalize_seifert, spherical_order, BaseSurface, SeifertData,
};
use dehn_core::slope::{change_basis, distance, BasisChange, Slope};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn from_checks(results: &[CheckResult], ids: &[&str]) -> Outcome {
    let picked: Vec<&CheckResult> = ids
        .iter()
        .map(|id| results.iter().find(|r| r.check_id == *id).expect("check id exists"))
        .collect();
    let detail = picked
        .iter()
        .map(|r| format!("{}={}{}", r.check_id, if r.passed { "ok" } else { "FAIL" }, if r.passed { String::new() } else { format!(" (observed {})", r.observed) }))
        .collect::<Vec<_>>()
        .join("; ");
    Outcome { passed: picked.iter().all(|r| r.passed), detail }
}

enum Data {
    Full(Census),
    ManifoldsOnly(Census, String),
    Missing(String),
}

fn load_data(dir: &Path) -> Data {
    let m = dir.join("manifolds.csv");
    let f = dir.join("fillings.csv");
    if !m.exists() {
        return Data::Missing(format!("{} not found", m.display()));
    }
    if f.exists() {
        return match load_census(&m, &f) {
            Ok(c) => Data::Full(c),
            Err(e) => Data::Missing(format!("census failed to load: {e}")),
        };
    }
    let header = FILLING_HEADER.join(",") + "\n";
    match std::fs::File::open(&m).map_err(|e| e.to_string()).and_then(|file| {
        read_census(std::io::BufReader::new(file), header.as_bytes()).map_err(|e| e.to_string())
    }) {
        Ok(c) => Data::ManifoldsOnly(c, format!("{} not found", f.display())),
        Err(e) => Data::Missing(format!("manifolds failed to load: {e}")),
    }
}

fn length_of(c: &Census, name: &str, p: i64, q: i64) -> Option<(f64, CuspTranslations)> {
    let t = c.manifolds.get(name)?.translations;
    Some((slope_length(&t, &Slope::new(p, q).ok()?), t))
}

/// The geometric part of criterion 6 that needs only cusp translations.
fn geometry_only(c: &Census) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    let audit = analytics::short_slope_audit(c, analytics::SIX_THEOREM_BOUND).expect("translations present");
    let rel = (audit.total as f64 - analytics::SHORT_SLOPES as f64) / analytics::SHORT_SLOPES as f64;
    let within = rel.abs() <= analytics::SHORT_SLOPE_TOLERANCE;
    ok &= within;
    parts.push(format!("short slopes {} ({:+.3}% vs {})", audit.total, rel * 100.0, analytics::SHORT_SLOPES));
    match length_of(c, "o9_18855", 1, 1) {
        Some((len, _)) => {
            let good = (len - 3.92794).abs() <= 1e-4;
            ok &= good;
            parts.push(format!("l(o9_18855 (1,1)) = {len:.6}{}", if good { "" } else { " FAIL" }));
        }
        None => {
            ok = false;
            parts.push("o9_18855 missing".into());
        }
    }
    match length_of(c, "s546", -1, 1) {
        Some((down, t)) => {
            let s = Slope::new(-1, 1).expect("primitive");
            let cover = cyclic_cover_translations(&t, 17, &s);
            let up = cover.m.norm();
            let area_ok = (cusp_area(&cover).unwrap() / cusp_area(&t).unwrap() - 17.0).abs() < 1e-9;
            let good = (up - 4.442966).abs() <= 1e-4 && (up - down).abs() <= 1e-12 * down && area_ok;
            ok &= good;
            parts.push(format!("s546 17-fold cover meridian = {up:.6}{}", if good { "" } else { " FAIL" }));
        }
        None => {
            ok = false;
            parts.push("s546 missing".into());
        }
    }
    (ok, parts.join("; "))
}

fn dataset_criteria(data: &Data) -> Vec<Outcome> {
    match data {
        Data::Missing(why) => (1..=6).map(|_| fail(format!("census unavailable: {why}"))).collect(),
        Data::ManifoldsOnly(c, why) => {
            let mut out: Vec<Outcome> = (1..=5).map(|_| fail(format!("fillings unavailable: {why}"))).collect();
            let (_, geo) = geometry_only(c);
            out.push(fail(format!("fillings unavailable ({why}); translation-only parts: {geo}")));
            out
        }
        Data::Full(c) => {
            let r = analytics::run_suite(c, Suite::All);
            let total = c.fillings.len();
            let c1 = if total == analytics::TOTAL_FILLINGS {
                pass(format!("{total} fillings"))
            } else {
                fail(format!("{total} fillings, expected {}", analytics::TOTAL_FILLINGS))
            };
            let c2 = from_checks(&r, &["emax"]);
            let c3 = from_checks(&r, &["knots.count", "knots.total", "knots.cabling", "knots.lens", "knots.sfs_integral"]);
            let c4 = from_checks(&r, &["sums.two", "sums.summand", "sums.three"]);
            let c5 = from_checks(&r, &["spherical.count", "finite.nonabelian", "toroidal.max"]);
            let checks = from_checks(&r, &["slopes.length", "slopes.audit", "slopes.lens_max"]);
            let (geo_ok, geo) = geometry_only(c);
            let c6 = Outcome { passed: checks.passed && geo_ok, detail: format!("{}; {geo}", checks.detail) };
            vec![c1, c2, c3, c4, c5, c6]
        }
    }
}

fn criterion_7() -> Outcome {
    let sd = |f: &[(i64, i64)]| SeifertData::new(BaseSurface::S2, f.iter().copied());
    let a = spherical_order(&sd(&[(2, 1), (3, 2), (3, -1)]));
    let b = sd(&[(2, 1), (3, 2), (5, -3)]);
    let ob = spherical_order(&b);
    let h = first_homology(&b);
    let ok = a == Ok(BigInt::from(120)) && ob == Ok(BigInt::from(2040)) && h == Ok(AbelianGroup::cyclic(17));
    let detail = format!(
        "orders {} and {}, H1 = {}",
        a.map_or_else(|e| e.to_string(), |x| x.to_string()),
        ob.map_or_else(|e| e.to_string(), |x| x.to_string()),
        h.map_or_else(|e| e.to_string(), |x| x.to_string())
    );
    Outcome { passed: ok, detail }
}

/// Box scan over a box containing both the `ceil(bound / lambda_1)` box and
/// the Cramer's-rule box; `lambda_1` is found by its own scan.
fn brute_force(t: &CuspTranslations, bound: f64) -> Vec<Slope> {
    let area = (t.m.conj() * t.l).im.abs();
    let scan = |lim: f64| {
        let pmax = (lim * t.l.norm() / area).ceil() as i64 + 1;
        let qmax = (lim * t.m.norm() / area).ceil() as i64 + 1;
        (pmax, qmax)
    };
    let (p0, q0) = scan(t.m.norm().min(t.l.norm()));
    let mut lambda1 = f64::INFINITY;
    for p in -p0..=p0 {
        for q in -q0..=q0 {
            if (p, q) != (0, 0) {
                lambda1 = lambda1.min((t.m * p as f64 + t.l * q as f64).norm());
            }
        }
    }
    let lim = bound + 1e-9;
    let k = (bound / lambda1).ceil() as i64;
    let (pc, qc) = scan(lim);
    let (pmax, qmax) = (pc.max(k), qc.max(k));
    let mut out = Vec::new();
    for q in 0..=qmax {
        for p in -pmax..=pmax {
            if (q > 0 || p > 0) && num_integer::gcd(p, q) == 1 && (t.m * p as f64 + t.l * q as f64).norm() <= lim {
                out.push(Slope::new(p, q).expect("primitive"));
            }
        }
    }
    out.sort();
    out
}

fn plant_violation(r: &mut rand_chacha::ChaCha8Rng, g: &GraphDescription) -> (GraphDescription, Option<usize>, Option<usize>) {
    let mut nodes = g.nodes().to_vec();
    let mut edges = g.edges().to_vec();
    let leaves: Vec<usize> = (0..nodes.len()).filter(|&i| nodes[i].base.boundary_components == 1).collect();
    if !leaves.is_empty() && r.gen_bool(0.5) {
        let i = leaves[r.gen_range(0..leaves.len())];
        let fibers: Vec<(i64, i64)> = if r.gen_bool(0.5) { vec![] } else { vec![common::exceptional_fiber(r, 9)] };
        nodes[i] = SeifertData::new(BaseSurface::DISK, fibers);
        (GraphDescription::new(nodes, edges).expect("valid"), Some(i), None)
    } else {
        let k = r.gen_range(0..edges.len());
        edges[k] = GraphEdge { gluing: BasisChange::identity(), ..edges[k].clone() };
        (GraphDescription::new(nodes, edges).expect("valid"), None, Some(k))
    }
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();

    // short-slope enumeration
    let mut r = common::rng(0x5107e);
    let mut n = 0;
    for _ in 0..100 {
        let t = common::lattice(&mut r);
        for bound in 1..=6 {
            n += 1;
            if enumerate_short_slopes(&t, bound as f64) != brute_force(&t, bound as f64) {
                failures.push(format!("enumeration differs at {t:?} bound {bound}"));
            }
        }
    }
    counts.push(format!("{n} enumerations"));

    // intersection number under basis change
    let mut r = common::rng(0xde17a);
    for _ in 0..1000 {
        let a = common::coprime_pair(&mut r, 1_000_000);
        let b = common::coprime_pair(&mut r, 1_000_000);
        let (a, b) = (Slope::new(a.0, a.1).unwrap(), Slope::new(b.0, b.1).unwrap());
        let u = common::unimodular(&mut r, 12, 50);
        let (ua, ub) = (change_basis(&a, &u).unwrap(), change_basis(&b, &u).unwrap());
        let direct = (a.p() * b.q() - b.p() * a.q()).abs();
        if distance(&ua, &ub) != direct || distance(&a, &b) != direct {
            failures.push(format!("distance changed: {a} {b} under {u}"));
        }
    }
    counts.push("1000 distance samples".into());

    // normalization
    let mut r = common::rng(0x0e0f);
    for _ in 0..500 {
        let sd = common::closed_seifert(&mut r);
        let norm = normalize_seifert(&sd).unwrap();
        let ok = normalize_seifert(&norm).as_ref() == Ok(&norm)
            && euler_number(&norm) == euler_number(&sd)
            && first_homology(&norm) == first_homology(&sd);
        if !ok {
            failures.push(format!("normal form of {sd} is not invariant"));
        }
    }
    counts.push("500 normalizations".into());

    // |H1| = |e| * alpha1 alpha2 alpha3 over spherical triples
    let mut r = common::rng(0x5fe3);
    let triples: [[i64; 3]; 4] = [[2, 2, 0], [2, 3, 3], [2, 3, 4], [2, 3, 5]];
    let mut n = 0;
    while n < 500 {
        let mut a = triples[r.gen_range(0..4)];
        if a[2] == 0 {
            a[2] = r.gen_range(2..40);
        }
        let fibers: Vec<(i64, i64)> = a
            .iter()
            .map(|&alpha| loop {
                let b = r.gen_range(-5 * alpha..=5 * alpha);
                if num_integer::gcd(alpha, b) == 1 {
                    break (alpha, b);
                }
            })
            .collect();
        let sd = SeifertData::new(BaseSurface::S2, fibers);
        let e = euler_number(&sd).unwrap();
        if e.is_zero() {
            continue;
        }
        n += 1;
        let expected = e.abs() * BigRational::from_integer(BigInt::from(a.iter().product::<i64>()));
        let order = first_homology(&sd).unwrap().order().map(BigRational::from_integer);
        if order != Some(expected) {
            failures.push(format!("|H1| of {sd} differs from |e| prod alpha"));
        }
    }
    counts.push("500 spherical triples".into());

    // fiber swap involution
    let mut n = 0;
    for b in -50..=50 {
        let mut fibers = vec![(2, 1), (2, 1)];
        if b != 0 {
            fibers.push((1, b));
        }
        for sd in [
            SeifertData::new(BaseSurface::DISK, fibers),
            SeifertData::new(BaseSurface::MOBIUS, if b == 0 { vec![] } else { vec![(1, b)] }),
        ] {
            n += 1;
            let norm = normalize_seifert(&sd).unwrap();
            let there = fiber_swap(&sd).expect("swappable");
            let back = fiber_swap(&there.swapped).expect("swappable back");
            if back.swapped != norm || back.boundary_map.compose(&there.boundary_map) != BasisChange::identity() {
                failures.push(format!("swap of {sd} is not an involution"));
            }
        }
    }
    counts.push(format!("{n} swaps"));

    // description round trip
    let mut r = common::rng(0xde5c);
    for _ in 0..1000 {
        let d = common::description(&mut r);
        let text = render_description(&d);
        match parse_description(&text) {
            Ok(back) => {
                let norm = d.normalize();
                let again = parse_description(&render_description(&norm)).map(|x| render_description(&x));
                if back.normalize() != norm || again.as_deref() != Ok(render_description(&norm).as_str()) {
                    failures.push(format!("round trip changed {text}"));
                }
            }
            Err(e) => failures.push(format!("cannot parse rendered {text}: {e}")),
        }
    }
    counts.push("1000 round trips".into());

    // certification catches planted violations
    let mut r = common::rng(0xce27);
    for _ in 0..200 {
        let g = common::graph(&mut r);
        let (bad, node, edge) = plant_violation(&mut r, &g);
        let report = certify_minimal(&bad);
        let cited = node.is_none_or(|i| report.solid_torus_nodes.contains(&i))
            && edge.is_none_or(|k| report.fiber_matching_edges.contains(&k));
        if report.passed() || !cited {
            failures.push(format!("planted violation missed in {bad}"));
        }
    }
    counts.push("200 planted graphs".into());

    let set: BTreeSet<&String> = failures.iter().collect();
    if failures.is_empty() {
        pass(counts.join(", "))
    } else {
        fail(format!("{} failures, first: {}", set.len(), failures[0]))
    }
}

fn main() -> ExitCode {
    let names = [
        "total exceptional fillings",
        "e(M) maximum and the e >= 7 manifolds",
        "knot exterior suite",
        "connected sum suite",
        "spherical count, finite nonabelian and toroidal maxima",
        "slope lengths and short-slope audit",
        "Seifert oracle fixtures",
        "property suites",
    ];
    let start = Instant::now();
    let data = load_data(&common::data_dir());
    let mut outcomes = dataset_criteria(&data);
    outcomes.push(criterion_7());
    outcomes.push(criterion_8());
    let mut all = true;
    for (i, (name, o)) in names.iter().zip(&outcomes).enumerate() {
        all &= o.passed;
        println!("{} criterion {}: {name}: {}", if o.passed { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
