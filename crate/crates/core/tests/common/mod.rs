//! Seeded generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::path::PathBuf;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use dehn_core::cusp::CuspTranslations;
use dehn_core::description::{LensSpace, ManifoldDescription, NamedManifold};
use dehn_core::graph::{GraphDescription, GraphEdge};
use dehn_core::seifert::{BaseSurface, SeifertData};
use dehn_core::slope::BasisChange;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `CENSUS_DATA_DIR`, or `data/census` at the workspace root.
pub fn data_dir() -> PathBuf {
    std::env::var_os("CENSUS_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/census")))
}

/// A lattice with both translations of moderate size and area at least 0.2.
pub fn lattice(r: &mut ChaCha8Rng) -> CuspTranslations {
    loop {
        let m = Complex64::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let l = Complex64::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        if (m.conj() * l).im.abs() >= 0.2 {
            return CuspTranslations::new(m, l).expect("nondegenerate");
        }
    }
}

/// Random unimodular matrix as a product of elementary moves.
pub fn unimodular(r: &mut ChaCha8Rng, steps: usize, max_shift: i64) -> BasisChange {
    let mut u = BasisChange::identity();
    for _ in 0..steps {
        let k = r.gen_range(-max_shift..=max_shift);
        let e = match r.gen_range(0..3) {
            0 => BasisChange::new(1, k, 0, 1),
            1 => BasisChange::new(1, 0, k, 1),
            _ => BasisChange::new(0, 1, 1, 0),
        }
        .expect("elementary");
        u = e.compose(&u);
    }
    u
}

pub fn coprime_pair(r: &mut ChaCha8Rng, max: i64) -> (i64, i64) {
    loop {
        let p = r.gen_range(-max..=max);
        let q = r.gen_range(-max..=max);
        if num_integer::gcd(p, q) == 1 {
            return (p, q);
        }
    }
}

pub fn fiber(r: &mut ChaCha8Rng, max_alpha: i64) -> (i64, i64) {
    loop {
        let a = r.gen_range(1..=max_alpha);
        let b = r.gen_range(-3 * max_alpha..=3 * max_alpha);
        if a == 1 || num_integer::gcd(a, b) == 1 {
            return (a, b);
        }
    }
}

/// Fiber with `alpha >= 2`.
pub fn exceptional_fiber(r: &mut ChaCha8Rng, max_alpha: i64) -> (i64, i64) {
    loop {
        let f = fiber(r, max_alpha);
        if f.0 >= 2 {
            return f;
        }
    }
}

pub fn closed_seifert(r: &mut ChaCha8Rng) -> SeifertData {
    let base = *[BaseSurface::S2, BaseSurface::S2, BaseSurface::RP2].choose(r).expect("nonempty");
    let n = r.gen_range(0..=5);
    SeifertData::new(base, (0..n).map(|_| fiber(r, 12)))
}

fn base_with_boundary(r: &mut ChaCha8Rng, boundary: u32) -> BaseSurface {
    match boundary {
        1 if r.gen_bool(0.3) => BaseSurface::MOBIUS,
        b if r.gen_bool(0.15) => BaseSurface { genus: 1, orientable: true, boundary_components: b },
        b => BaseSurface { genus: 0, orientable: true, boundary_components: b },
    }
}

/// A node that is not a solid torus: a disk base gets two or more
/// exceptional fibers.
pub fn graph_node(r: &mut ChaCha8Rng, boundary: u32) -> SeifertData {
    let base = base_with_boundary(r, boundary);
    let min = if base == BaseSurface::DISK { 2 } else { 0 };
    let n = r.gen_range(min..=3.max(min));
    let mut fibers: Vec<(i64, i64)> = (0..n).map(|_| exceptional_fiber(r, 7)).collect();
    if r.gen_bool(0.3) {
        fibers.push((1, r.gen_range(-3..=3)));
    }
    SeifertData::new(base, fibers)
}

/// Connected graph on 1 to 4 nodes (tree plus up to two extra edges),
/// with random gluings.
pub fn graph(r: &mut ChaCha8Rng) -> GraphDescription {
    let n = r.gen_range(1..=4usize);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    let extra = if n == 1 { 1 } else { r.gen_range(0..=2) };
    for _ in 0..extra {
        pairs.push((r.gen_range(0..n), r.gen_range(0..n)));
    }
    let mut degree = vec![0u32; n];
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
    }
    let nodes: Vec<SeifertData> = degree.iter().map(|&d| graph_node(r, d)).collect();
    let mut next = vec![0u32; n];
    let mut slot = |i: usize| {
        next[i] += 1;
        next[i] - 1
    };
    let edges: Vec<GraphEdge> = pairs
        .into_iter()
        .map(|(a, b)| {
            let from = (a, slot(a));
            let to = (b, slot(b));
            GraphEdge { from, to, gluing: unimodular(r, 4, 3) }
        })
        .collect();
    GraphDescription::new(nodes, edges).expect("generated graph is valid")
}

fn prime(r: &mut ChaCha8Rng) -> ManifoldDescription {
    match r.gen_range(0..7) {
        0 => loop {
            let p = r.gen_range(2..60);
            let q = r.gen_range(-80..80);
            if let Ok(l) = LensSpace::new(p, q) {
                break ManifoldDescription::Lens(l);
            }
        },
        1 => ManifoldDescription::Named(*[NamedManifold::S2xS1, NamedManifold::RP3].choose(r).expect("nonempty")),
        2 | 3 => ManifoldDescription::Seifert(closed_seifert(r)),
        4 => ManifoldDescription::Graph(graph(r)),
        5 => ManifoldDescription::Sol,
        _ => ManifoldDescription::HypPiece,
    }
}

pub fn description(r: &mut ChaCha8Rng) -> ManifoldDescription {
    match r.gen_range(0..10) {
        0 => ManifoldDescription::Named(NamedManifold::S3),
        1 | 2 => ManifoldDescription::ConnectedSum((0..r.gen_range(2..=4)).map(|_| prime(r)).collect()),
        _ => prime(r),
    }
}
