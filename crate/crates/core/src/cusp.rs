//! Flat horotorus geometry: slope lengths, short-slope enumeration and the
//! cyclic-cover sublattice that keeps one slope's length fixed.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::slope::Slope;

/// Slopes whose length exceeds the bound by at most this much are kept.
pub const LENGTH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CuspError {
    #[error("cusp translations span a degenerate lattice (area {area})")]
    DegenerateLattice { area: f64 },
}

/// Translations of the two preferred basis curves on the cusp cross-section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspTranslations {
    pub m: Complex64,
    pub l: Complex64,
}

impl CuspTranslations {
    pub fn new(m: Complex64, l: Complex64) -> Result<Self, CuspError> {
        let t = CuspTranslations { m, l };
        cusp_area(&t)?;
        Ok(t)
    }

    fn raw_area(&self) -> f64 {
        (self.m.conj() * self.l).im.abs()
    }

    fn vector(&self, p: f64, q: f64) -> Complex64 {
        self.m * p + self.l * q
    }
}

/// Area of the horotorus, `|Im(conj(m) l)|`.
pub fn cusp_area(t: &CuspTranslations) -> Result<f64, CuspError> {
    let area = t.raw_area();
    if area > 0.0 && area.is_finite() {
        Ok(area)
    } else {
        Err(CuspError::DegenerateLattice { area })
    }
}

/// Euclidean length of the geodesic representative of `s`.
pub fn slope_length(t: &CuspTranslations, s: &Slope) -> f64 {
    let p = s.p().to_f64().unwrap_or(f64::INFINITY);
    let q = s.q().to_f64().unwrap_or(f64::INFINITY);
    t.vector(p, q).norm()
}

/// Lagrange-reduced basis of the cusp lattice with the integer matrix that
/// produced it: `u = a m + b l`, `v = c m + d l`.
#[derive(Debug, Clone, Copy)]
struct ReducedBasis {
    u: Complex64,
    v: Complex64,
    coeffs: [[i64; 2]; 2],
}

fn gauss_reduce(t: &CuspTranslations) -> ReducedBasis {
    let (mut u, mut v) = (t.m, t.l);
    let mut cu = [1i64, 0];
    let mut cv = [0i64, 1];
    if u.norm_sqr() > v.norm_sqr() {
        std::mem::swap(&mut u, &mut v);
        std::mem::swap(&mut cu, &mut cv);
    }
    loop {
        let mu = ((u.conj() * v).re / u.norm_sqr()).round();
        if mu != 0.0 {
            let k = mu as i64;
            v -= u * mu;
            cv = [cv[0] - k * cu[0], cv[1] - k * cu[1]];
        }
        if v.norm_sqr() < u.norm_sqr() {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut cu, &mut cv);
        } else {
            break;
        }
    }
    ReducedBasis { u, v, coeffs: [cu, cv] }
}

/// Length of the shortest nonzero lattice vector.
pub fn shortest_vector_length(t: &CuspTranslations) -> f64 {
    gauss_reduce(t).u.norm()
}

/// All canonical slopes of length at most `bound` (plus tolerance), sorted.
pub fn enumerate_short_slopes(t: &CuspTranslations, bound: f64) -> Vec<Slope> {
    let Ok(area) = cusp_area(t) else {
        return Vec::new();
    };
    if bound.is_nan() || bound <= 0.0 {
        return Vec::new();
    }
    let limit = bound + LENGTH_TOLERANCE;
    let red = gauss_reduce(t);
    let (u, v) = (red.u, red.v);
    let u_len = u.norm();
    // Component of v orthogonal to u, and its projection onto u in units of u.
    let height = area / u_len;
    let shift = (u.conj() * v).re / u.norm_sqr();

    let b_max = (limit / height + 1e-9).floor() as i64;
    let mut out = Vec::new();
    for b in 0..=b_max {
        let perp = b as f64 * height;
        let slack = limit * limit - perp * perp;
        if slack < 0.0 {
            continue;
        }
        let r = slack.sqrt() / u_len;
        let centre = -(b as f64) * shift;
        let lo = (centre - r - 1.0).floor() as i64;
        let hi = (centre + r + 1.0).ceil() as i64;
        for a in lo..=hi {
            // one representative of each +-pair
            if b == 0 && a <= 0 {
                continue;
            }
            if (u * a as f64 + v * b as f64).norm() > limit {
                continue;
            }
            if a.gcd(&b) != 1 {
                continue;
            }
            let [cu, cv] = red.coeffs;
            let p = a * cu[0] + b * cv[0];
            let q = a * cu[1] + b * cv[1];
            let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
            out.push(Slope::from_canonical_i64(p, q));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Extended Euclid completion `(r, s)` with `p s - q r = 1`, choosing
/// `s` in `(-q/2, q/2]` (and `r = 0` for the meridian).
pub fn unimodular_completion(slope: &Slope) -> (BigInt, BigInt) {
    let (p, q) = (slope.p(), slope.q());
    if q.is_zero() {
        return (BigInt::zero(), BigInt::from(1));
    }
    // p x + q y = 1 with x = s, y = -r
    let ext = p.extended_gcd(q);
    debug_assert!(ext.gcd == BigInt::from(1));
    let (mut s, mut r) = (ext.x, -ext.y);
    // shift by k (p, q): s -> s + k q, r -> r + k p
    // smallest k with 2(s + k q) > -q
    let num: BigInt = -q - &s * 2;
    let k: BigInt = num.div_floor(&(q * 2)) + 1;
    s += &k * q;
    r += &k * p;
    debug_assert!(p * &s - q * &r == BigInt::from(1));
    debug_assert!(s.abs() * 2 <= q.abs());
    (r, s)
}

/// Translations of the index-`n` sublattice in which `invariant` stays a
/// primitive vector of the same length.
pub fn cyclic_cover_translations(
    t: &CuspTranslations,
    n: u64,
    invariant: &Slope,
) -> CuspTranslations {
    let (r, s) = unimodular_completion(invariant);
    let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
    let v = t.vector(f(invariant.p()), f(invariant.q()));
    let w = t.vector(f(&r), f(&s)) * n as f64;
    CuspTranslations { m: v, l: w }
}
