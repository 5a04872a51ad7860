//! Slopes on a torus: primitive integer pairs modulo sign.
//!
//! A slope `(p, q)` is stored with the canonical sign `q > 0`, or `q = 0`
//! and `p > 0`. Coordinates are arbitrary precision so basis changes and
//! covering constructions never overflow.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("(0,0) is not a slope")]
    ZeroVector,
    #[error("({p},{q}) is not primitive")]
    NotPrimitive { p: BigInt, q: BigInt },
    #[error("basis change has determinant {det}, expected +1 or -1")]
    NotUnimodular { det: BigInt },
    #[error("malformed slope text {0:?}")]
    Malformed(String),
}

/// An unoriented slope with canonical sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Builds the canonical slope through `(p, q)`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, SlopeError> {
        canonical_slope(p.into(), q.into())
    }

    /// The meridian `(1, 0)` of the preferred basis.
    pub fn meridian() -> Self {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    /// The slope `(0, 1)`; in Seifert boundary coordinates this is the fiber.
    pub fn longitude() -> Self {
        Slope { p: BigInt::zero(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// Coordinates as machine integers, when they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.p.to_i64()?, self.q.to_i64()?))
    }

    pub(crate) fn from_canonical_i64(p: i64, q: i64) -> Self {
        debug_assert!(q > 0 || (q == 0 && p == 1));
        Slope { p: p.into(), q: q.into() }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SlopeError::Malformed(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (a, b) = inner.split_once(',').ok_or_else(malformed)?;
        let p: BigInt = a.trim().parse().map_err(|_| malformed())?;
        let q: BigInt = b.trim().parse().map_err(|_| malformed())?;
        canonical_slope(p, q)
    }
}

impl serde::Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Returns the sign-normalized slope through `(p, q)`.
pub fn canonical_slope(p: BigInt, q: BigInt) -> Result<Slope, SlopeError> {
    if p.is_zero() && q.is_zero() {
        return Err(SlopeError::ZeroVector);
    }
    if !p.gcd(&q).is_one() {
        return Err(SlopeError::NotPrimitive { p, q });
    }
    if q.is_negative() || (q.is_zero() && p.is_negative()) {
        Ok(Slope { p: -p, q: -q })
    } else {
        Ok(Slope { p, q })
    }
}

/// Geometric intersection number `|a.p * b.q - b.p * a.q|`.
pub fn distance(a: &Slope, b: &Slope) -> BigInt {
    (&a.p * &b.q - &b.p * &a.q).abs()
}

/// True iff `s` meets `meridian` exactly once.
pub fn is_integral(s: &Slope, meridian: &Slope) -> bool {
    distance(s, meridian).is_one()
}

/// A 2x2 integer matrix acting on column vectors `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisChange {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl BasisChange {
    /// Builds the matrix `[[a, b], [c, d]]`, rejecting non-unimodular input.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, SlopeError> {
        let m = BasisChange { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        m.check_unimodular()?;
        Ok(m)
    }

    pub fn identity() -> Self {
        BasisChange { a: 1.into(), b: 0.into(), c: 0.into(), d: 1.into() }
    }

    pub fn swap() -> Self {
        BasisChange { a: 0.into(), b: 1.into(), c: 1.into(), d: 0.into() }
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn check_unimodular(&self) -> Result<(), SlopeError> {
        let det = self.determinant();
        if det.abs().is_one() {
            Ok(())
        } else {
            Err(SlopeError::NotUnimodular { det })
        }
    }

    /// Applies the matrix to a raw vector.
    pub fn apply(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        (&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &BasisChange) -> BasisChange {
        BasisChange {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> BasisChange {
        let det = self.determinant();
        debug_assert!(det.abs().is_one());
        BasisChange {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        }
    }
}

impl fmt::Display for BasisChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{};{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Re-expresses `s` in the basis given by `u`.
pub fn change_basis(s: &Slope, u: &BasisChange) -> Result<Slope, SlopeError> {
    u.check_unimodular()?;
    let (p, q) = u.apply(&s.p, &s.q);
    canonical_slope(p, q)
}
