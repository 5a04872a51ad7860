//! Seifert fibered spaces: normal form, Euler number, first homology,
//! lens-space extraction, spherical fundamental groups and the alternate
//! fibration of the twisted I-bundle over the Klein bottle.
//!
//! A fibration is a base surface with a list of fiber invariants
//! `(alpha, beta)`. Fibers with `alpha = 1` carry integer twisting; the
//! normal form folds all of it into a single `(1, b)` term. The first
//! homology uses the presentation with generators for the base (`a_j, b_j`
//! or crosscaps `v_j`), one `c_i` per fiber, the boundary curves `d_k` and
//! the regular fiber `h`:
//!
//! ```text
//! alpha_i c_i + beta_i h = 0
//! sum c_i + sum d_k (+ 2 sum v_j) = 0
//! 2 h = 0                      (nonorientable base)
//! ```
//!
//! On each boundary torus the coordinates are `(section, fiber)` with the
//! section being `d_k`; a `(1, b)` term shifts the section by `b` fibers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::description::{LensSpace, ManifoldDescription, NamedManifold};
use crate::homology::{presented_group, AbelianGroup};
use crate::slope::BasisChange;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("invalid fiber ({alpha},{beta})")]
    InvalidFiber { alpha: i64, beta: i64 },
    #[error("operation needs a closed base surface")]
    OpenBase,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("({0},{1},{2}) prism triples have no order formula here")]
    UnsupportedTriple(i64, i64, i64),
    #[error("fundamental group is not finite and noncyclic")]
    NotFinite,
    #[error("integer overflow while normalizing")]
    Overflow,
}

/// Compact surface used as the base of a fibration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BaseSurface {
    /// Handles when orientable, crosscaps otherwise.
    pub genus: u32,
    pub orientable: bool,
    pub boundary_components: u32,
}

impl BaseSurface {
    pub const S2: BaseSurface = BaseSurface { genus: 0, orientable: true, boundary_components: 0 };
    pub const RP2: BaseSurface = BaseSurface { genus: 1, orientable: false, boundary_components: 0 };
    pub const DISK: BaseSurface = BaseSurface { genus: 0, orientable: true, boundary_components: 1 };
    pub const MOBIUS: BaseSurface = BaseSurface { genus: 1, orientable: false, boundary_components: 1 };
    pub const ANNULUS: BaseSurface = BaseSurface { genus: 0, orientable: true, boundary_components: 2 };
    pub const PANTS: BaseSurface = BaseSurface { genus: 0, orientable: true, boundary_components: 3 };

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    /// Euler characteristic of the underlying surface.
    pub fn euler_characteristic(&self) -> i64 {
        let handles = if self.orientable { 2 * self.genus as i64 } else { self.genus as i64 };
        2 - handles - self.boundary_components as i64
    }

    /// Token used by the description grammar.
    pub fn token(&self) -> String {
        match *self {
            Self::S2 => "S2".into(),
            Self::RP2 => "RP2".into(),
            Self::DISK => "D2".into(),
            Self::MOBIUS => "Mb".into(),
            Self::ANNULUS => "A".into(),
            Self::PANTS => "P".into(),
            BaseSurface { genus, orientable: true, boundary_components } => {
                format!("O({genus},{boundary_components})")
            }
            BaseSurface { genus, orientable: false, boundary_components } => {
                format!("N({genus},{boundary_components})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fiber {
    pub alpha: i64,
    pub beta: i64,
}

impl Fiber {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        Fiber { alpha, beta }
    }

    pub fn is_exceptional(&self) -> bool {
        self.alpha >= 2
    }

    fn validate(&self) -> Result<(), SeifertError> {
        let ok = match self.alpha {
            1 => true,
            a if a >= 2 => num_integer::gcd(a, self.beta) == 1,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(SeifertError::InvalidFiber { alpha: self.alpha, beta: self.beta })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SeifertData {
    pub base: BaseSurface,
    pub fibers: Vec<Fiber>,
}

impl SeifertData {
    pub fn new(base: BaseSurface, fibers: impl IntoIterator<Item = (i64, i64)>) -> Self {
        SeifertData { base, fibers: fibers.into_iter().map(|(a, b)| Fiber::new(a, b)).collect() }
    }

    pub fn validate(&self) -> Result<(), SeifertError> {
        self.fibers.iter().try_for_each(Fiber::validate)
    }

    pub fn exceptional_fibers(&self) -> impl Iterator<Item = &Fiber> {
        self.fibers.iter().filter(|f| f.is_exceptional())
    }

    pub fn exceptional_count(&self) -> usize {
        self.exceptional_fibers().count()
    }

    /// Sorted multiplicities of the exceptional fibers.
    pub fn alphas(&self) -> Vec<i64> {
        let mut a: Vec<i64> = self.exceptional_fibers().map(|f| f.alpha).collect();
        a.sort_unstable();
        a
    }

    /// Total integer twisting `b` of the normal form.
    pub fn obstruction(&self) -> Result<i64, SeifertError> {
        Ok(normalize_seifert(self)?
            .fibers
            .iter()
            .find(|f| f.alpha == 1)
            .map_or(0, |f| f.beta))
    }

    /// Orbifold Euler characteristic of the base, `chi - sum(1 - 1/alpha)`.
    pub fn orbifold_euler_characteristic(&self) -> BigRational {
        let chi = BigRational::from_integer(self.base.euler_characteristic().into());
        self.exceptional_fibers().fold(chi, |acc, f| {
            acc - BigRational::one() + BigRational::new(1.into(), f.alpha.into())
        })
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SFS[{}:", self.base.token())?;
        for fib in &self.fibers {
            write!(f, " ({},{})", fib.alpha, fib.beta)?;
        }
        write!(f, "]")
    }
}

/// Canonical form: `0 < beta < alpha` for exceptional fibers, integer
/// twisting collected into one `(1, b)` term (omitted when `b = 0`),
/// fibers sorted.
pub fn normalize_seifert(sd: &SeifertData) -> Result<SeifertData, SeifertError> {
    sd.validate()?;
    let mut surplus: i64 = 0;
    let mut fibers = Vec::with_capacity(sd.fibers.len() + 1);
    for f in &sd.fibers {
        if f.alpha == 1 {
            surplus = surplus.checked_add(f.beta).ok_or(SeifertError::Overflow)?;
        } else {
            let beta = f.beta.rem_euclid(f.alpha);
            let k = (f.beta - beta) / f.alpha;
            surplus = surplus.checked_add(k).ok_or(SeifertError::Overflow)?;
            fibers.push(Fiber::new(f.alpha, beta));
        }
    }
    if surplus != 0 {
        fibers.push(Fiber::new(1, surplus));
    }
    fibers.sort_unstable();
    Ok(SeifertData { base: sd.base, fibers })
}

/// `-sum beta_i / alpha_i` over all fibers.
pub fn euler_number(sd: &SeifertData) -> Result<BigRational, SeifertError> {
    if !sd.base.is_closed() {
        return Err(SeifertError::OpenBase);
    }
    sd.validate()?;
    Ok(-sd
        .fibers
        .iter()
        .map(|f| BigRational::new(f.beta.into(), f.alpha.into()))
        .fold(BigRational::zero(), |a, b| a + b))
}

/// Relation rows of the abelianized presentation. Column layout: base
/// generators, then one per fiber, then one per boundary curve, then `h`.
pub(crate) struct Presentation {
    pub generators: usize,
    pub relations: Vec<Vec<BigInt>>,
    /// Columns of the boundary sections `d_k`.
    pub boundary_columns: Vec<usize>,
    pub fiber_column: usize,
}

pub(crate) fn presentation(sd: &SeifertData) -> Presentation {
    let n_base = if sd.base.orientable { 2 * sd.base.genus } else { sd.base.genus } as usize;
    let n_fib = sd.fibers.len();
    let n_bdy = sd.base.boundary_components as usize;
    let generators = n_base + n_fib + n_bdy + 1;
    let h = generators - 1;
    let zero_row = || vec![BigInt::zero(); generators];
    let mut relations = Vec::new();
    for (i, f) in sd.fibers.iter().enumerate() {
        let mut row = zero_row();
        row[n_base + i] = f.alpha.into();
        row[h] = f.beta.into();
        relations.push(row);
    }
    let mut row = zero_row();
    for c in row.iter_mut().skip(n_base).take(n_fib + n_bdy) {
        *c = BigInt::one();
    }
    if !sd.base.orientable {
        for c in row.iter_mut().take(n_base) {
            *c = BigInt::from(2);
        }
    }
    relations.push(row);
    if !sd.base.orientable {
        let mut row = zero_row();
        row[h] = BigInt::from(2);
        relations.push(row);
    }
    Presentation {
        generators,
        relations,
        boundary_columns: (n_base + n_fib..n_base + n_fib + n_bdy).collect(),
        fiber_column: h,
    }
}

/// Smith normal form of the fibration's homology presentation.
pub fn first_homology(sd: &SeifertData) -> Result<AbelianGroup, SeifertError> {
    if !sd.base.is_closed() {
        return Err(SeifertError::OpenBase);
    }
    sd.validate()?;
    let pres = presentation(sd);
    Ok(presented_group(pres.generators, &pres.relations))
}

/// Lens space (or S3, S2xS1) of a fibration over S2 with at most two
/// exceptional fibers.
pub fn classify_two_fiber(sd: &SeifertData) -> Result<ManifoldDescription, SeifertError> {
    if sd.base != BaseSurface::S2 {
        return Err(SeifertError::NotApplicable("base is not S2"));
    }
    let norm = normalize_seifert(sd)?;
    if norm.exceptional_count() > 2 {
        return Err(SeifertError::NotApplicable("more than two exceptional fibers"));
    }
    let b = i128::from(norm.obstruction()?);
    let mut ex: Vec<(i128, i128)> =
        norm.exceptional_fibers().map(|f| (f.alpha.into(), f.beta.into())).collect();
    while ex.len() < 2 {
        ex.insert(0, (1, 0));
    }
    let (a1, b1) = ex[0];
    let (a2, b2) = (ex[1].0, ex[1].1 + b * ex[1].0);
    // Solid-torus meridians in (section, fiber) coordinates of the common
    // boundary: mu1 = (a1, b1), mu2 = (-a2, b2).
    let p = a1 * b2 + a2 * b1;
    match p.abs() {
        0 => return Ok(ManifoldDescription::Named(NamedManifold::S2xS1)),
        1 => return Ok(ManifoldDescription::Named(NamedManifold::S3)),
        _ => {}
    }
    // longitude lambda1 = (g, d) with a1 d - b1 g = 1
    let ext = a1.extended_gcd(&b1);
    let (d, g) = (ext.x, -ext.y);
    debug_assert_eq!(a1 * d - b1 * g, 1);
    // mu2 = x mu1 + y lambda1, so y = det(mu1, mu2) = p and
    // x = det(mu2, lambda1) = -a2 d - b2 g.
    let x = -a2 * d - b2 * g;
    let to_i64 = |v: i128| i64::try_from(v).map_err(|_| SeifertError::Overflow);
    let lens = LensSpace::new(to_i64(p.abs())?, to_i64(x.rem_euclid(p.abs()))?)
        .map_err(|_| SeifertError::NotApplicable("degenerate lens parameters"))?;
    Ok(lens.into_description())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pi1Class {
    FiniteCyclic,
    FiniteNoncyclic,
    Infinite,
}

impl Pi1Class {
    pub fn is_finite(self) -> bool {
        self != Pi1Class::Infinite
    }

    pub fn token(self) -> &'static str {
        match self {
            Pi1Class::FiniteCyclic => "finite_cyclic",
            Pi1Class::FiniteNoncyclic => "finite_noncyclic",
            Pi1Class::Infinite => "infinite",
        }
    }
}

fn is_spherical_triple(alphas: &[i64]) -> bool {
    matches!(alphas, [2, 2, _] | [2, 3, 3] | [2, 3, 4] | [2, 3, 5])
}

/// `4|e| / chi^2`, the order of a spherical fundamental group.
fn spherical_group_order(sd: &SeifertData) -> Result<BigRational, SeifertError> {
    let e = euler_number(sd)?;
    let chi = sd.orbifold_euler_characteristic();
    Ok(e.abs() * BigRational::from_integer(4.into()) / (&chi * &chi))
}

pub fn pi1_class(sd: &SeifertData) -> Result<Pi1Class, SeifertError> {
    if !sd.base.is_closed() {
        return Err(SeifertError::OpenBase);
    }
    let norm = normalize_seifert(sd)?;
    let e = euler_number(&norm)?;
    let alphas = norm.alphas();
    if norm.base == BaseSurface::S2 {
        return Ok(match alphas.len() {
            _ if e.is_zero() => Pi1Class::Infinite,
            0..=2 => Pi1Class::FiniteCyclic,
            3 if is_spherical_triple(&alphas) => Pi1Class::FiniteNoncyclic,
            _ => Pi1Class::Infinite,
        });
    }
    if norm.base == BaseSurface::RP2 && alphas.len() <= 1 && !e.is_zero() {
        // prism manifolds and the lens spaces fibering over RP2
        let h1 = first_homology(&norm)?.order().ok_or(SeifertError::NotFinite)?;
        let order = spherical_group_order(&norm)?;
        return Ok(if BigRational::from_integer(h1) == order {
            Pi1Class::FiniteCyclic
        } else {
            Pi1Class::FiniteNoncyclic
        });
    }
    Ok(Pi1Class::Infinite)
}

/// Order of a finite noncyclic group with tetrahedral, octahedral or
/// icosahedral base: `|H_1|` times the order of the commutator subgroup.
pub fn spherical_order(sd: &SeifertData) -> Result<BigInt, SeifertError> {
    if pi1_class(sd)? != Pi1Class::FiniteNoncyclic {
        return Err(SeifertError::NotFinite);
    }
    let norm = normalize_seifert(sd)?;
    let commutator = match norm.alphas().as_slice() {
        _ if norm.base != BaseSurface::S2 => {
            return Err(SeifertError::NotApplicable("prism manifold over RP2"))
        }
        [2, 3, 3] => 8,
        [2, 3, 4] => 24,
        [2, 3, 5] => 120,
        &[a, b, c] => return Err(SeifertError::UnsupportedTriple(a, b, c)),
        _ => return Err(SeifertError::NotFinite),
    };
    let h1 = first_homology(&norm)?.order().ok_or(SeifertError::NotFinite)?;
    Ok(h1 * commutator)
}

/// Alternate fibration together with the map from the original
/// `(section, fiber)` boundary coordinates to the new ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSwap {
    pub swapped: SeifertData,
    pub boundary_map: BasisChange,
}

/// Boundary map from `D2[(1,b) (2,1) (2,1)]` to `Mb[(1,b)]`:
/// `[[b+1,1],[b(b+1)+1,b]]`.
///
/// The Möbius fiber is the disk-side curve `(1, -(b+1))` and the disk
/// fiber is the Möbius-side curve `(1, b)`. The fiber images are forced by
/// homology of glued doubles; the remaining freedom is the choice of
/// section on the Möbius side, fixed here so that the map is the
/// conjugate `[[1,0],[b,1]] * [[0,1],[1,0]] * [[1,0],[b+1,1]]`.
pub(crate) fn disk_to_mobius_map(b: i64) -> BasisChange {
    let b = BigInt::from(b);
    let k: BigInt = &b + 1;
    BasisChange { a: k.clone(), b: BigInt::one(), c: &b * &k + 1, d: b }
}

/// The twisted I-bundle over the Klein bottle fibers both as
/// `D2[(2,1) (2,1)]` and over the Möbius band; returns the other fibration,
/// carrying the `(1, b)` term across unchanged.
pub fn fiber_swap(sd: &SeifertData) -> Option<FiberSwap> {
    let norm = normalize_seifert(sd).ok()?;
    let b = norm.obstruction().ok()?;
    let twist = (b != 0).then(|| Fiber::new(1, b));
    if norm.base == BaseSurface::DISK && norm.alphas() == [2, 2] {
        let swapped = SeifertData { base: BaseSurface::MOBIUS, fibers: twist.into_iter().collect() };
        return Some(FiberSwap { swapped, boundary_map: disk_to_mobius_map(b) });
    }
    if norm.base == BaseSurface::MOBIUS && norm.exceptional_count() == 0 {
        let mut fibers: Vec<Fiber> = twist.into_iter().collect();
        fibers.extend([Fiber::new(2, 1), Fiber::new(2, 1)]);
        fibers.sort_unstable();
        let swapped = SeifertData { base: BaseSurface::DISK, fibers };
        return Some(FiberSwap { swapped, boundary_map: disk_to_mobius_map(b).inverse() });
    }
    None
}

/// Exact rational as `i64` pair, for reports.
pub fn rational_parts(r: &BigRational) -> (Option<i64>, Option<i64>) {
    (r.numer().to_i64(), r.denom().to_i64())
}
