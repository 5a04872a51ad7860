//! Closed 3-manifold descriptions and their text grammar.
//!
//! ```text
//! desc    = summand { " # " summand }
//! summand = lens | named | sfs | graph | "SOL" | "HYP_PIECE"
//! lens    = "L(" int "," int ")"
//! named   = "S3" | "S2xS1" | "RP3"
//! sfs     = "SFS[" base ":" { fiber } "]"
//! base    = "S2" | "RP2" | "D2" | "Mb" | "A" | "P" | "O(" int "," int ")" | "N(" int "," int ")"
//! fiber   = "(" int "," int ")"
//! graph   = "GRAPH{" node { ";" node } ";" edge { ";" edge } "}"
//! node    = ident "=" sfs
//! edge    = "e:" ident "." int "-" ident "." int "[" int "," int ";" int "," int "]"
//! ```
//!
//! `O(g,b)` is the orientable surface of genus `g` with `b` boundary
//! circles, `N(g,b)` the nonorientable one with `g` crosscaps. Whitespace
//! is allowed between tokens. Top-level fibrations must have closed bases
//! and graph nodes must have boundary.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::graph::{GraphDescription, GraphEdge};
use crate::seifert::{normalize_seifert, BaseSurface, Fiber, SeifertData};
use crate::slope::BasisChange;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedManifold {
    S3,
    S2xS1,
    RP3,
}

impl NamedManifold {
    pub fn token(self) -> &'static str {
        match self {
            NamedManifold::S3 => "S3",
            NamedManifold::S2xS1 => "S2xS1",
            NamedManifold::RP3 => "RP3",
        }
    }
}

/// `L(p, q)` with `p >= 2` and `gcd(p, q) = 1`. Equality is up to
/// homeomorphism: compare [`LensSpace::canonical`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self, String> {
        if p < 2 {
            return Err(format!("L({p},{q}) needs p >= 2; use S3 or S2xS1"));
        }
        if num_integer::gcd(p, q) != 1 {
            return Err(format!("L({p},{q}) has gcd(p,q) != 1"));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Smallest representative of `{+-q, +-q^-1} mod p`.
    pub fn canonical(&self) -> LensSpace {
        let p = self.p;
        let q = self.q.rem_euclid(p);
        let inv = BigInt::from(q).extended_gcd(&BigInt::from(p)).x;
        let inv = i64::try_from(inv.mod_floor(&BigInt::from(p))).expect("reduced mod p");
        let q = [q, p - q, inv, p - inv].into_iter().min().expect("nonempty");
        LensSpace { p, q }
    }

    pub fn is_homeomorphic(&self, other: &LensSpace) -> bool {
        self.canonical() == other.canonical()
    }

    /// Normalized description; `L(2,1)` is written `RP3`.
    pub fn into_description(self) -> ManifoldDescription {
        let c = self.canonical();
        if c.p == 2 {
            ManifoldDescription::Named(NamedManifold::RP3)
        } else {
            ManifoldDescription::Lens(c)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ManifoldDescription {
    Lens(LensSpace),
    Named(NamedManifold),
    Seifert(SeifertData),
    Graph(GraphDescription),
    Sol,
    HypPiece,
    ConnectedSum(Vec<ManifoldDescription>),
}

impl ManifoldDescription {
    /// Canonical lens parameters, Seifert normal forms, and sorted summands.
    pub fn normalize(&self) -> ManifoldDescription {
        use ManifoldDescription as D;
        match self {
            D::Lens(l) => l.into_description(),
            D::Seifert(sd) => D::Seifert(normalize_seifert(sd).unwrap_or_else(|_| sd.clone())),
            D::Graph(g) => D::Graph(g.normalize()),
            D::ConnectedSum(parts) => {
                let mut parts: Vec<D> = parts.iter().map(D::normalize).collect();
                parts.sort_by_cached_key(|d| d.to_string());
                D::ConnectedSum(parts)
            }
            other => other.clone(),
        }
    }

    pub fn summands(&self) -> &[ManifoldDescription] {
        match self {
            ManifoldDescription::ConnectedSum(parts) => parts,
            other => std::slice::from_ref(other),
        }
    }
}

impl fmt::Display for ManifoldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ManifoldDescription as D;
        match self {
            D::Lens(l) => write!(f, "L({},{})", l.p, l.q),
            D::Named(n) => f.write_str(n.token()),
            D::Seifert(sd) => write!(f, "{sd}"),
            D::Graph(g) => write!(f, "{g}"),
            D::Sol => f.write_str("SOL"),
            D::HypPiece => f.write_str("HYP_PIECE"),
            D::ConnectedSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" # ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn render_description(d: &ManifoldDescription) -> String {
    d.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptionError {
    #[error("parse error at byte {offset}: expected one of {expected:?}")]
    Parse { offset: usize, expected: Vec<&'static str> },
    #[error("invalid description at byte {offset}: {message}")]
    Invariant { offset: usize, message: String },
}

pub fn parse_description(text: &str) -> Result<ManifoldDescription, DescriptionError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.ws();
    let d = p.desc()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.expected(&["#", "end of input"]));
    }
    Ok(d)
}

impl std::str::FromStr for ManifoldDescription {
    type Err = DescriptionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_description(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

const SUMMANDS: &[&str] = &["L(", "S3", "S2xS1", "RP3", "SFS[", "GRAPH{", "SOL", "HYP_PIECE"];
const BASES: &[&str] = &["S2", "RP2", "D2", "Mb", "A", "P", "O(", "N("];

impl<'a> Parser<'a> {
    fn ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek_str(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.peek_str(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &[&'static str]) -> DescriptionError {
        DescriptionError::Parse { offset: self.pos, expected: what.to_vec() }
    }

    fn invariant(&self, offset: usize, message: impl Into<String>) -> DescriptionError {
        DescriptionError::Invariant { offset, message: message.into() }
    }

    fn expect(&mut self, s: &'static str) -> Result<(), DescriptionError> {
        self.ws();
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.expected(&[s]))
        }
    }

    fn int(&mut self) -> Result<i64, DescriptionError> {
        self.ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.expected(&["integer"]));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| self.invariant(start, format!("integer {text} out of range")))
    }

    fn desc(&mut self) -> Result<ManifoldDescription, DescriptionError> {
        let mut parts = vec![self.summand()?];
        loop {
            let save = self.pos;
            self.ws();
            if self.eat("#") {
                self.ws();
                parts.push(self.summand()?);
            } else {
                self.pos = save;
                break;
            }
        }
        if parts.len() == 1 {
            return Ok(parts.pop().expect("one summand"));
        }
        if parts.contains(&ManifoldDescription::Named(NamedManifold::S3)) {
            return Err(self.invariant(0, "S3 is not a connected-sum summand"));
        }
        Ok(ManifoldDescription::ConnectedSum(parts))
    }

    fn summand(&mut self) -> Result<ManifoldDescription, DescriptionError> {
        use ManifoldDescription as D;
        let start = self.pos;
        if self.peek_str("SFS[") {
            let sd = self.sfs()?;
            if !sd.base.is_closed() {
                return Err(self.invariant(start, "a closed manifold needs a closed base"));
            }
            return Ok(D::Seifert(sd));
        }
        if self.eat("SOL") {
            return Ok(D::Sol);
        }
        if self.eat("S2xS1") {
            return Ok(D::Named(NamedManifold::S2xS1));
        }
        if self.eat("S3") {
            return Ok(D::Named(NamedManifold::S3));
        }
        if self.eat("RP3") {
            return Ok(D::Named(NamedManifold::RP3));
        }
        if self.eat("HYP_PIECE") {
            return Ok(D::HypPiece);
        }
        if self.eat("L(") {
            let p = self.int()?;
            self.expect(",")?;
            let q = self.int()?;
            self.expect(")")?;
            return LensSpace::new(p, q).map(D::Lens).map_err(|m| self.invariant(start, m));
        }
        if self.peek_str("GRAPH{") {
            return self.graph().map(D::Graph);
        }
        Err(self.expected(SUMMANDS))
    }

    fn base(&mut self) -> Result<BaseSurface, DescriptionError> {
        self.ws();
        let named = [
            ("S2", BaseSurface::S2),
            ("RP2", BaseSurface::RP2),
            ("D2", BaseSurface::DISK),
            ("Mb", BaseSurface::MOBIUS),
            ("A", BaseSurface::ANNULUS),
            ("P", BaseSurface::PANTS),
        ];
        for (tok, base) in named {
            if self.eat(tok) {
                return Ok(base);
            }
        }
        let start = self.pos;
        let orientable = if self.eat("O(") {
            true
        } else if self.eat("N(") {
            false
        } else {
            return Err(self.expected(BASES));
        };
        let genus = self.int()?;
        self.expect(",")?;
        let boundary = self.int()?;
        self.expect(")")?;
        let (Ok(genus), Ok(boundary_components)) = (u32::try_from(genus), u32::try_from(boundary)) else {
            return Err(self.invariant(start, "base genus and boundary must be nonnegative"));
        };
        if !orientable && genus == 0 {
            return Err(self.invariant(start, "nonorientable base needs at least one crosscap"));
        }
        Ok(BaseSurface { genus, orientable, boundary_components })
    }

    fn sfs(&mut self) -> Result<SeifertData, DescriptionError> {
        self.expect("SFS[")?;
        let base = self.base()?;
        self.expect(":")?;
        let mut fibers = Vec::new();
        loop {
            self.ws();
            if self.eat("]") {
                break;
            }
            let start = self.pos;
            if !self.eat("(") {
                return Err(self.expected(&["(", "]"]));
            }
            let alpha = self.int()?;
            self.expect(",")?;
            let beta = self.int()?;
            self.expect(")")?;
            let fiber = Fiber::new(alpha, beta);
            SeifertData { base, fibers: vec![fiber] }
                .validate()
                .map_err(|e| self.invariant(start, e.to_string()))?;
            fibers.push(fiber);
        }
        Ok(SeifertData { base, fibers })
    }

    fn ident(&mut self) -> Result<String, DescriptionError> {
        self.ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start || self.src[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.expected(&["identifier"]));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn graph(&mut self) -> Result<GraphDescription, DescriptionError> {
        let start = self.pos;
        self.expect("GRAPH{")?;
        let mut names: Vec<String> = Vec::new();
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        loop {
            self.ws();
            if self.peek_str("e:") {
                break;
            }
            let at = self.pos;
            let name = self.ident()?;
            if names.contains(&name) {
                return Err(self.invariant(at, format!("duplicate node name {name}")));
            }
            self.expect("=")?;
            self.ws();
            let node_at = self.pos;
            let sd = self.sfs()?;
            if sd.base.is_closed() {
                return Err(self.invariant(node_at, "graph nodes need boundary"));
            }
            names.push(name);
            nodes.push(sd);
            self.expect(";")?;
        }
        loop {
            self.expect("e:")?;
            let end = |p: &mut Self| -> Result<(usize, u32), DescriptionError> {
                let at = p.pos;
                let name = p.ident()?;
                let idx = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| p.invariant(at, format!("unknown node {name}")))?;
                p.expect(".")?;
                let slot_at = p.pos;
                let slot = u32::try_from(p.int()?)
                    .map_err(|_| p.invariant(slot_at, "negative boundary slot"))?;
                Ok((idx, slot))
            };
            let from = end(self)?;
            self.expect("-")?;
            let to = end(self)?;
            self.expect("[")?;
            let a = self.int()?;
            self.expect(",")?;
            let b = self.int()?;
            self.expect(";")?;
            let c = self.int()?;
            self.expect(",")?;
            let d = self.int()?;
            self.expect("]")?;
            let gluing = BasisChange { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
            edges.push(GraphEdge { from, to, gluing });
            self.ws();
            if self.eat(";") {
                continue;
            }
            self.expect("}")?;
            break;
        }
        GraphDescription::new(nodes, edges).map_err(|e| self.invariant(start, e.to_string()))
    }
}
