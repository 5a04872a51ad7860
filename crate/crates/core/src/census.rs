//! Census files: `manifolds.csv` and `fillings.csv`.
//!
//! ```text
//! manifolds.csv: name,tets,m_re,m_im,l_re,l_im,knot_exterior
//! fillings.csv:  name,p,q,description
//! ```
//!
//! Descriptions contain commas; they may be quoted, and an unquoted
//! description simply runs to the end of the line.
//!
//! Loading validates every row and reports all problems at once, sorted so
//! the report does not depend on row order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cusp::CuspTranslations;
use crate::description::{parse_description, ManifoldDescription};
use crate::slope::{canonical_slope, Slope};
use crate::taxonomy::{classify, Classification};

pub const MANIFOLD_HEADER: [&str; 7] = ["name", "tets", "m_re", "m_im", "l_re", "l_im", "knot_exterior"];
pub const FILLING_HEADER: [&str; 4] = ["name", "p", "q", "description"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ManifoldRecord {
    pub name: String,
    pub tetrahedra: u8,
    #[serde(skip)]
    pub translations: CuspTranslations,
    pub knot_exterior: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FillingRecord {
    pub manifold: String,
    pub slope: Slope,
    pub description: ManifoldDescription,
    pub classification: Classification,
}

impl FillingRecord {
    pub fn new(manifold: impl Into<String>, slope: Slope, description: ManifoldDescription) -> Result<Self, String> {
        let classification = classify(&description).map_err(|e| e.to_string())?;
        Ok(FillingRecord { manifold: manifold.into(), slope, description, classification })
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Census {
    pub manifolds: BTreeMap<String, ManifoldRecord>,
    /// Sorted by `(manifold, slope)`.
    pub fillings: Vec<FillingRecord>,
}

impl Census {
    /// Fillings grouped by manifold name, in name order.
    pub fn fillings_by_manifold(&self) -> BTreeMap<&str, Vec<&FillingRecord>> {
        let mut out: BTreeMap<&str, Vec<&FillingRecord>> = BTreeMap::new();
        for f in &self.fillings {
            out.entry(f.manifold.as_str()).or_default().push(f);
        }
        out
    }

    pub fn write_csv<W1: Write, W2: Write>(&self, manifolds: W1, fillings: W2) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(manifolds);
        w.write_record(MANIFOLD_HEADER)?;
        for r in self.manifolds.values() {
            let t = &r.translations;
            w.write_record([
                r.name.clone(),
                r.tetrahedra.to_string(),
                format!("{:?}", t.m.re),
                format!("{:?}", t.m.im),
                format!("{:?}", t.l.re),
                format!("{:?}", t.l.im),
                r.knot_exterior.to_string(),
            ])?;
        }
        w.flush()?;
        let mut w = csv::Writer::from_writer(fillings);
        w.write_record(FILLING_HEADER)?;
        for f in &self.fillings {
            w.write_record([
                f.manifold.clone(),
                f.slope.p().to_string(),
                f.slope.q().to_string(),
                f.description.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusFile {
    Manifolds,
    Fillings,
}

impl fmt::Display for CensusFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusFile::Manifolds => "manifolds",
            CensusFile::Fillings => "fillings",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowErrorKind {
    BadField { field: &'static str, message: String },
    BadSlope { message: String },
    BadDescription { message: String },
    UnlabeledDescription { message: String },
    DegenerateLattice,
    TetrahedraMismatch { tets: i64 },
    DuplicateKey,
    UnknownManifold,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RowError {
    pub file: CensusFile,
    /// Manifold name, or `name (p,q)` for fillings.
    pub key: String,
    pub kind: RowErrorKind,
    /// 1-based line in the file, header included.
    pub line: u64,
}

impl fmt::Display for RowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} line {} [{}]: ", self.file, self.line, self.key)?;
        match &self.kind {
            RowErrorKind::BadField { field, message } => write!(f, "bad {field}: {message}"),
            RowErrorKind::BadSlope { message } => write!(f, "bad slope: {message}"),
            RowErrorKind::BadDescription { message } => write!(f, "bad description: {message}"),
            RowErrorKind::UnlabeledDescription { message } => write!(f, "description fits no type: {message}"),
            RowErrorKind::DegenerateLattice => write!(f, "cusp translations are degenerate"),
            RowErrorKind::TetrahedraMismatch { tets } => write!(f, "{tets} tetrahedra inconsistent with name"),
            RowErrorKind::DuplicateKey => write!(f, "duplicate key"),
            RowErrorKind::UnknownManifold => write!(f, "filling of unknown manifold"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{file} file: expected header {expected:?}, found {found:?}")]
    Schema { file: CensusFile, expected: Vec<&'static str>, found: Vec<String> },
    #[error("{file} file: malformed CSV: {message}")]
    Csv { file: CensusFile, message: String },
    #[error("{} invalid rows; first: {}", .0.len(), .0[0])]
    Rows(Vec<RowError>),
}

/// Tetrahedron count implied by a census name prefix, if any.
fn expected_tets(name: &str) -> Option<std::ops::RangeInclusive<i64>> {
    if name.starts_with("o9_") {
        Some(9..=9)
    } else {
        match name.chars().next() {
            Some('m') => Some(1..=5),
            Some('s') => Some(6..=6),
            Some('v') => Some(7..=7),
            Some('t') => Some(8..=8),
            _ => None,
        }
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "1" | "yes" => Some(true),
        "false" | "0" | "no" => Some(false),
        _ => None,
    }
}

fn read_rows<R: Read>(
    reader: R,
    file: CensusFile,
    header: &[&'static str],
) -> Result<Vec<(u64, csv::StringRecord)>, CensusError> {
    let csv_err = |e: csv::Error| CensusError::Csv { file, message: e.to_string() };
    let mut rdr = csv::ReaderBuilder::new().flexible(true).from_reader(reader);
    let found: Vec<String> = rdr.headers().map_err(csv_err)?.iter().map(|h| h.trim().to_string()).collect();
    if found != header {
        return Err(CensusError::Schema { file, expected: header.to_vec(), found });
    }
    rdr.records()
        .map(|r| {
            let r = r.map_err(csv_err)?;
            Ok((r.position().map_or(0, |p| p.line()), r))
        })
        .collect()
}

fn parse_manifold_row(line: u64, r: &csv::StringRecord) -> Result<ManifoldRecord, RowError> {
    let name = r.get(0).unwrap_or("").trim().to_string();
    let err = |kind| RowError { file: CensusFile::Manifolds, key: name.clone(), kind, line };
    let bad = |field: &'static str, message: String| err(RowErrorKind::BadField { field, message });
    if r.len() != MANIFOLD_HEADER.len() {
        return Err(bad("row", format!("expected {} fields, found {}", MANIFOLD_HEADER.len(), r.len())));
    }
    if name.is_empty() {
        return Err(bad("name", "empty".into()));
    }
    let tets: i64 = r[1].trim().parse().map_err(|e| bad("tets", format!("{:?}: {e}", &r[1])))?;
    let allowed = expected_tets(&name).unwrap_or(1..=9);
    if !allowed.contains(&tets) {
        return Err(err(RowErrorKind::TetrahedraMismatch { tets }));
    }
    let mut parts = [0.0f64; 4];
    for (i, field) in ["m_re", "m_im", "l_re", "l_im"].into_iter().enumerate() {
        let s = r[i + 2].trim();
        parts[i] = s
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| bad(field, format!("{s:?} is not a finite number")))?;
    }
    let translations = CuspTranslations::new(Complex64::new(parts[0], parts[1]), Complex64::new(parts[2], parts[3]))
        .map_err(|_| err(RowErrorKind::DegenerateLattice))?;
    let knot_exterior = parse_bool(&r[6]).ok_or_else(|| bad("knot_exterior", format!("{:?}", &r[6])))?;
    Ok(ManifoldRecord { name, tetrahedra: tets as u8, translations, knot_exterior })
}

fn parse_filling_row(line: u64, r: &csv::StringRecord) -> Result<FillingRecord, RowError> {
    let name = r.get(0).unwrap_or("").trim().to_string();
    let raw_key = format!("{name} ({},{})", r.get(1).unwrap_or("").trim(), r.get(2).unwrap_or("").trim());
    let err = |key: &str, kind| RowError { file: CensusFile::Fillings, key: key.to_string(), kind, line };
    if r.len() < FILLING_HEADER.len() {
        let message = format!("expected {} fields, found {}", FILLING_HEADER.len(), r.len());
        return Err(err(&raw_key, RowErrorKind::BadField { field: "row", message }));
    }
    let int = |i: usize, field: &'static str| {
        r[i].trim().parse::<BigInt>().map_err(|e| {
            err(&raw_key, RowErrorKind::BadField { field, message: format!("{:?}: {e}", &r[i]) })
        })
    };
    let (p, q) = (int(1, "p")?, int(2, "q")?);
    let slope = canonical_slope(p, q).map_err(|e| err(&raw_key, RowErrorKind::BadSlope { message: e.to_string() }))?;
    let key = format!("{name} {slope}");
    let text = r.iter().skip(3).collect::<Vec<_>>().join(",");
    let description = parse_description(text.trim())
        .map_err(|e| err(&key, RowErrorKind::BadDescription { message: e.to_string() }))?;
    FillingRecord::new(name.clone(), slope, description)
        .map_err(|message| err(&key, RowErrorKind::UnlabeledDescription { message }))
}

/// Validate census CSV content from any readers.
pub fn read_census<R1: Read, R2: Read>(manifolds: R1, fillings: R2) -> Result<Census, CensusError> {
    let m_rows = read_rows(manifolds, CensusFile::Manifolds, &MANIFOLD_HEADER)?;
    let f_rows = read_rows(fillings, CensusFile::Fillings, &FILLING_HEADER)?;

    let parsed_m: Vec<_> = m_rows.par_iter().map(|(line, r)| parse_manifold_row(*line, r)).collect();
    let parsed_f: Vec<_> = f_rows.par_iter().map(|(line, r)| parse_filling_row(*line, r)).collect();

    let mut errors = Vec::new();
    let mut manifolds = BTreeMap::new();
    // keep the first occurrence by line; later ones are duplicates
    for (res, (line, _)) in parsed_m.into_iter().zip(&m_rows) {
        match res {
            Ok(rec) => {
                if manifolds.contains_key(&rec.name) {
                    errors.push(RowError {
                        file: CensusFile::Manifolds,
                        key: rec.name,
                        kind: RowErrorKind::DuplicateKey,
                        line: *line,
                    });
                } else {
                    manifolds.insert(rec.name.clone(), rec);
                }
            }
            Err(e) => errors.push(e),
        }
    }
    let mut known_names: HashSet<String> = manifolds.keys().cloned().collect();
    // rows that failed to parse still name a manifold; don't cascade
    known_names.extend(errors.iter().filter(|e| e.file == CensusFile::Manifolds).map(|e| e.key.clone()));

    let mut fillings = Vec::new();
    let mut seen = HashSet::new();
    for (res, (line, _)) in parsed_f.into_iter().zip(&f_rows) {
        match res {
            Ok(rec) => {
                let key = format!("{} {}", rec.manifold, rec.slope);
                let err = |kind| RowError { file: CensusFile::Fillings, key: key.clone(), kind, line: *line };
                if !known_names.contains(&rec.manifold) {
                    errors.push(err(RowErrorKind::UnknownManifold));
                } else if !seen.insert((rec.manifold.clone(), rec.slope.clone())) {
                    errors.push(err(RowErrorKind::DuplicateKey));
                } else {
                    fillings.push(rec);
                }
            }
            Err(e) => errors.push(e),
        }
    }
    if !errors.is_empty() {
        errors.sort();
        return Err(CensusError::Rows(errors));
    }
    fillings.sort_by(|a, b| (&a.manifold, &a.slope).cmp(&(&b.manifold, &b.slope)));
    Ok(Census { manifolds, fillings })
}

pub fn load_census(manifolds_path: &Path, fillings_path: &Path) -> Result<Census, CensusError> {
    let open = |p: &Path| {
        std::fs::File::open(p)
            .map(std::io::BufReader::new)
            .map_err(|source| CensusError::Io { path: p.to_path_buf(), source })
    };
    read_census(open(manifolds_path)?, open(fillings_path)?)
}
