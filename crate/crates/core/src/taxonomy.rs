//! Types of nonhyperbolic closed manifolds and the "most restricted type"
//! resolution used for tables.
//!
//! `RP3 # RP3` is not counted as Seifert fibered, so every Seifert fibered
//! space is prime. `S2xS1` is prime and not a lens space.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::description::{ManifoldDescription, NamedManifold};
use crate::seifert::{
    classify_two_fiber, euler_number, first_homology, normalize_seifert, pi1_class, BaseSurface,
    Pi1Class, SeifertData,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaxonomyError {
    #[error("unrecognized description {0:?}: {1}")]
    UnrecognizedDescription(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    S3,
    LensSpace,
    S2xS1,
    Rp3ConnsumRp3,
    FiniteNoncyclic,
    SeifertFibered,
    Sol,
    GraphManifold,
    ConnectedSum,
    HyperbolicPiece,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 10] = [
        TypeLabel::S3,
        TypeLabel::LensSpace,
        TypeLabel::S2xS1,
        TypeLabel::Rp3ConnsumRp3,
        TypeLabel::FiniteNoncyclic,
        TypeLabel::SeifertFibered,
        TypeLabel::Sol,
        TypeLabel::GraphManifold,
        TypeLabel::ConnectedSum,
        TypeLabel::HyperbolicPiece,
    ];

    pub fn token(self) -> &'static str {
        match self {
            TypeLabel::S3 => "s3",
            TypeLabel::LensSpace => "lens",
            TypeLabel::S2xS1 => "s2xs1",
            TypeLabel::Rp3ConnsumRp3 => "rp3_rp3",
            TypeLabel::FiniteNoncyclic => "finite_noncyclic",
            TypeLabel::SeifertFibered => "sfs",
            TypeLabel::Sol => "sol",
            TypeLabel::GraphManifold => "graph",
            TypeLabel::ConnectedSum => "connected_sum",
            TypeLabel::HyperbolicPiece => "hyp_piece",
        }
    }

    pub fn from_token(s: &str) -> Option<TypeLabel> {
        TypeLabel::ALL.into_iter().find(|l| l.token() == s)
    }

    /// S3, lens spaces and the finite noncyclic type.
    pub fn is_spherical(self) -> bool {
        matches!(self, TypeLabel::S3 | TypeLabel::LensSpace | TypeLabel::FiniteNoncyclic)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

/// One prime summand, after unpacking Seifert data that is really a lens
/// space or `RP3 # RP3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeKind {
    S3,
    /// `q` is `None` when the fibration determines the order but the
    /// parameter was not extracted (cyclic quotients fibering over RP2).
    Lens { p: i64, q: Option<i64> },
    S2xS1,
    FiniteNoncyclic,
    Seifert { toroidal: bool },
    Sol,
    Graph,
    HypPiece,
}

impl PrimeKind {
    fn is_seifert(self) -> bool {
        matches!(
            self,
            PrimeKind::S3
                | PrimeKind::Lens { .. }
                | PrimeKind::S2xS1
                | PrimeKind::FiniteNoncyclic
                | PrimeKind::Seifert { .. }
        )
    }

    fn is_toroidal(self) -> bool {
        matches!(
            self,
            PrimeKind::Seifert { toroidal: true } | PrimeKind::Sol | PrimeKind::Graph | PrimeKind::HypPiece
        )
    }

    fn is_finite(self) -> bool {
        matches!(self, PrimeKind::S3 | PrimeKind::Lens { .. } | PrimeKind::FiniteNoncyclic)
    }
}

fn unrecognized(d: &ManifoldDescription, why: impl Into<String>) -> TaxonomyError {
    TaxonomyError::UnrecognizedDescription(d.to_string(), why.into())
}

/// Whether a closed fibration with infinite fundamental group contains an
/// essential torus: over S2 with four or more exceptional fibers, or with
/// a Euclidean triple and zero Euler number; over RP2 with two or more;
/// over any other closed base always.
pub fn closed_seifert_is_toroidal(sd: &SeifertData) -> bool {
    let Ok(norm) = normalize_seifert(sd) else { return false };
    let alphas = norm.alphas();
    if norm.base == BaseSurface::S2 {
        let euler_zero = euler_number(&norm).is_ok_and(|e| e.is_zero());
        return alphas.len() >= 4
            || (matches!(alphas.as_slice(), [3, 3, 3] | [2, 4, 4] | [2, 3, 6]) && euler_zero);
    }
    if norm.base == BaseSurface::RP2 {
        return alphas.len() >= 2;
    }
    true
}

fn seifert_kinds(d: &ManifoldDescription, sd: &SeifertData) -> Result<Vec<PrimeKind>, TaxonomyError> {
    if !sd.base.is_closed() {
        return Err(unrecognized(d, "fibration has boundary"));
    }
    let norm = normalize_seifert(sd).map_err(|e| unrecognized(d, e.to_string()))?;
    if norm.base == BaseSurface::S2 && norm.exceptional_count() <= 2 {
        let lens = classify_two_fiber(&norm).map_err(|e| unrecognized(d, e.to_string()))?;
        return prime_kinds(&lens);
    }
    if norm.base == BaseSurface::RP2 && norm.fibers.is_empty() {
        // the trivial-Euler-number bundle over RP2 is RP3 # RP3
        let rp3 = PrimeKind::Lens { p: 2, q: Some(1) };
        return Ok(vec![rp3, rp3]);
    }
    let class = pi1_class(&norm).map_err(|e| unrecognized(d, e.to_string()))?;
    Ok(vec![match class {
        Pi1Class::FiniteCyclic => {
            let order = first_homology(&norm)
                .ok()
                .and_then(|h| h.order())
                .and_then(|o| o.to_i64())
                .ok_or_else(|| unrecognized(d, "cyclic group order out of range"))?;
            match order {
                1 => PrimeKind::S3,
                // only one lens space of each of these orders
                2..=4 => PrimeKind::Lens { p: order, q: Some(1) },
                _ => PrimeKind::Lens { p: order, q: None },
            }
        }
        Pi1Class::FiniteNoncyclic => PrimeKind::FiniteNoncyclic,
        Pi1Class::Infinite => PrimeKind::Seifert { toroidal: closed_seifert_is_toroidal(&norm) },
    }])
}

/// The prime decomposition as a list of kinds (one entry for a prime
/// manifold, none for S3 written as a trivial sum).
pub fn prime_kinds(d: &ManifoldDescription) -> Result<Vec<PrimeKind>, TaxonomyError> {
    use ManifoldDescription as D;
    Ok(match d {
        D::Named(NamedManifold::S3) => vec![PrimeKind::S3],
        D::Named(NamedManifold::S2xS1) => vec![PrimeKind::S2xS1],
        D::Named(NamedManifold::RP3) => vec![PrimeKind::Lens { p: 2, q: Some(1) }],
        D::Lens(l) => {
            let c = l.canonical();
            vec![PrimeKind::Lens { p: c.p(), q: Some(c.q()) }]
        }
        D::Seifert(sd) => seifert_kinds(d, sd)?,
        D::Graph(_) => vec![PrimeKind::Graph],
        D::Sol => vec![PrimeKind::Sol],
        D::HypPiece => vec![PrimeKind::HypPiece],
        D::ConnectedSum(parts) => {
            if parts.len() < 2 {
                return Err(unrecognized(d, "connected sum needs two summands"));
            }
            let mut out = Vec::new();
            for part in parts {
                if matches!(part, D::ConnectedSum(_)) {
                    return Err(unrecognized(d, "nested connected sum"));
                }
                // S3 summands are trivial
                out.extend(prime_kinds(part)?.into_iter().filter(|k| *k != PrimeKind::S3));
            }
            if out.is_empty() {
                out.push(PrimeKind::S3);
            }
            out
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertySet {
    pub is_connected_sum: bool,
    pub is_prime: bool,
    pub is_toroidal: bool,
    pub is_seifert: bool,
    pub is_graph: bool,
    pub is_sol: bool,
    pub has_hyperbolic_piece: bool,
    pub pi1_finite: bool,
    pub pi1_cyclic: bool,
    pub pi1_trivial: bool,
}

fn properties_of(kinds: &[PrimeKind]) -> PropertySet {
    let single = match kinds {
        [k] => Some(*k),
        _ => None,
    };
    let is_connected_sum = kinds.len() >= 2;
    PropertySet {
        is_connected_sum,
        is_prime: !is_connected_sum,
        is_toroidal: kinds.iter().any(|k| k.is_toroidal()),
        is_seifert: single.is_some_and(PrimeKind::is_seifert),
        is_graph: single.is_some_and(|k| k.is_seifert() || matches!(k, PrimeKind::Sol | PrimeKind::Graph)),
        is_sol: single == Some(PrimeKind::Sol),
        has_hyperbolic_piece: kinds.contains(&PrimeKind::HypPiece),
        // a sum of two nontrivial summands has infinite fundamental group
        pi1_finite: single.is_some_and(PrimeKind::is_finite),
        pi1_cyclic: single.is_some_and(|k| matches!(k, PrimeKind::S3 | PrimeKind::Lens { .. })),
        pi1_trivial: single == Some(PrimeKind::S3),
    }
}

pub fn property_set(d: &ManifoldDescription) -> Result<PropertySet, TaxonomyError> {
    Ok(properties_of(&prime_kinds(d)?))
}

fn resolve_kinds(kinds: &[PrimeKind]) -> TypeLabel {
    let rp3 = |k: &PrimeKind| matches!(k, PrimeKind::Lens { p: 2, .. });
    match kinds {
        [PrimeKind::S3] => return TypeLabel::S3,
        [PrimeKind::Lens { .. }] => return TypeLabel::LensSpace,
        [PrimeKind::S2xS1] => return TypeLabel::S2xS1,
        [a, b] if rp3(a) && rp3(b) => return TypeLabel::Rp3ConnsumRp3,
        _ => {}
    }
    let props = properties_of(kinds);
    if props.pi1_finite && !props.pi1_cyclic && props.is_prime {
        TypeLabel::FiniteNoncyclic
    } else if props.is_connected_sum {
        TypeLabel::ConnectedSum
    } else if props.is_seifert {
        TypeLabel::SeifertFibered
    } else if props.is_sol {
        TypeLabel::Sol
    } else if props.is_graph {
        TypeLabel::GraphManifold
    } else {
        TypeLabel::HyperbolicPiece
    }
}

pub fn resolve_type(d: &ManifoldDescription) -> Result<TypeLabel, TaxonomyError> {
    Ok(resolve_kinds(&prime_kinds(d)?))
}

/// Type and properties in one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: TypeLabel,
    pub properties: PropertySet,
    #[serde(skip)]
    pub kinds: Vec<PrimeKind>,
}

pub fn classify(d: &ManifoldDescription) -> Result<Classification, TaxonomyError> {
    let kinds = prime_kinds(d)?;
    Ok(Classification { label: resolve_kinds(&kinds), properties: properties_of(&kinds), kinds })
}
