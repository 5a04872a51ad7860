//! Graph manifolds: Seifert pieces glued along boundary tori.
//!
//! Every boundary slot carries `(section, fiber)` coordinates, so the fiber
//! of a piece is always the slope `(0,1)`. An edge's gluing matrix maps
//! coordinates on the `from` torus to coordinates on the `to` torus.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::homology::{presented_group, AbelianGroup};
use crate::seifert::{fiber_swap, normalize_seifert, presentation, SeifertData};
use crate::slope::{change_basis, BasisChange, Slope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {0} has no boundary")]
    ClosedNode(usize),
    #[error("edge end refers to missing node {0}")]
    NoSuchNode(usize),
    #[error("node {node} has no boundary slot {slot}")]
    NoSuchSlot { node: usize, slot: u32 },
    #[error("boundary slot {slot} of node {node} is used {uses} times")]
    SlotUse { node: usize, slot: u32, uses: usize },
    #[error("gluing of edge {0} is not unimodular")]
    NotUnimodular(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid node {node}: {message}")]
    InvalidNode { node: usize, message: String },
    #[error("no edge {0}")]
    NoSuchEdge(usize),
    #[error("graph has no nodes")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    /// `(node, boundary slot)`
    pub from: (usize, u32),
    pub to: (usize, u32),
    pub gluing: BasisChange,
}

impl GraphEdge {
    /// The same edge read from the other end.
    pub fn reversed(&self) -> GraphEdge {
        GraphEdge { from: self.to, to: self.from, gluing: self.gluing.inverse() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphDescription {
    nodes: Vec<SeifertData>,
    edges: Vec<GraphEdge>,
}

impl GraphDescription {
    pub fn new(nodes: Vec<SeifertData>, edges: Vec<GraphEdge>) -> Result<Self, GraphError> {
        if nodes.is_empty() {
            return Err(GraphError::Empty);
        }
        for (i, n) in nodes.iter().enumerate() {
            n.validate().map_err(|e| GraphError::InvalidNode { node: i, message: e.to_string() })?;
            if n.base.is_closed() {
                return Err(GraphError::ClosedNode(i));
            }
        }
        let mut uses = std::collections::BTreeMap::new();
        for (k, e) in edges.iter().enumerate() {
            if e.gluing.check_unimodular().is_err() {
                return Err(GraphError::NotUnimodular(k));
            }
            for (node, slot) in [e.from, e.to] {
                let n = nodes.get(node).ok_or(GraphError::NoSuchNode(node))?;
                if slot >= n.base.boundary_components {
                    return Err(GraphError::NoSuchSlot { node, slot });
                }
                *uses.entry((node, slot)).or_insert(0usize) += 1;
            }
        }
        for (node, n) in nodes.iter().enumerate() {
            for slot in 0..n.base.boundary_components {
                let count = uses.get(&(node, slot)).copied().unwrap_or(0);
                if count != 1 {
                    return Err(GraphError::SlotUse { node, slot, uses: count });
                }
            }
        }
        let g = GraphDescription { nodes, edges };
        if g.components() != 1 {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn nodes(&self) -> &[SeifertData] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub(crate) fn normalize(&self) -> GraphDescription {
        GraphDescription {
            nodes: self
                .nodes
                .iter()
                .map(|n| normalize_seifert(n).unwrap_or_else(|_| n.clone()))
                .collect(),
            edges: self.edges.clone(),
        }
    }

    fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.from.0), find(&mut parent, e.to.0));
            parent[a] = b;
        }
        (0..self.nodes.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            deg[e.from.0] += 1;
            deg[e.to.0] += 1;
        }
        deg
    }
}

impl fmt::Display for GraphDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GRAPH{{")?;
        for (i, n) in self.nodes.iter().enumerate() {
            write!(f, " n{i} = {n};")?;
        }
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, " e: n{}.{} - n{}.{} {}", e.from.0, e.from.1, e.to.0, e.to.1, e.gluing)?;
        }
        write!(f, " }}")
    }
}

/// Base D2 with at most one exceptional fiber.
pub fn is_solid_torus_node(node: &SeifertData) -> Result<bool, GraphError> {
    if node.base.is_closed() {
        return Err(GraphError::ClosedNode(0));
    }
    Ok(node.base == crate::seifert::BaseSurface::DISK && node.exceptional_count() <= 1)
}

/// Fiber slopes of a piece in its own boundary coordinates: `(0,1)` and,
/// for the piece with two fibrations, the other fibration's fiber.
pub fn candidate_fibers(node: &SeifertData) -> Vec<Slope> {
    let mut out = vec![Slope::longitude()];
    if let Some(sw) = fiber_swap(node) {
        let alt = change_basis(&Slope::longitude(), &sw.boundary_map.inverse())
            .expect("boundary map is unimodular");
        out.push(alt);
    }
    out
}

/// Whether the gluing of edge `edge_index` carries some fiber of one side
/// onto some fiber of the other.
pub fn edge_fibers_match(g: &GraphDescription, edge_index: usize) -> Result<bool, GraphError> {
    let e = g.edges.get(edge_index).ok_or(GraphError::NoSuchEdge(edge_index))?;
    let from = candidate_fibers(&g.nodes[e.from.0]);
    let to = candidate_fibers(&g.nodes[e.to.0]);
    Ok(from.iter().any(|f| {
        let image = change_basis(f, &e.gluing).expect("validated gluing");
        to.contains(&image)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub solid_torus_nodes: Vec<usize>,
    pub fiber_matching_edges: Vec<usize>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.solid_torus_nodes.is_empty() && self.fiber_matching_edges.is_empty()
    }
}

impl fmt::Display for CertificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "minimal: no solid-torus nodes, no fiber-matching gluings");
        }
        write!(f, "not minimal:")?;
        for n in &self.solid_torus_nodes {
            write!(f, " node n{n} is a solid torus;")?;
        }
        for e in &self.fiber_matching_edges {
            write!(f, " edge {e} matches fibers;")?;
        }
        Ok(())
    }
}

pub fn certify_minimal(g: &GraphDescription) -> CertificationReport {
    CertificationReport {
        solid_torus_nodes: (0..g.nodes.len())
            .filter(|&i| is_solid_torus_node(&g.nodes[i]).unwrap_or(false))
            .collect(),
        fiber_matching_edges: (0..g.edges.len())
            .filter(|&k| edge_fibers_match(g, k).unwrap_or(false))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    Segment,
    Loop,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphShape {
    pub kind: ShapeKind,
    pub vertex_count: usize,
}

pub fn graph_shape(g: &GraphDescription) -> GraphShape {
    let n = g.nodes.len();
    let m = g.edges.len();
    let deg = g.degrees();
    let kind = if m + 1 == n && deg.iter().all(|&d| d <= 2) {
        ShapeKind::Segment
    } else if m == n && deg.iter().all(|&d| d == 2) {
        ShapeKind::Loop
    } else {
        ShapeKind::Other
    };
    GraphShape { kind, vertex_count: n }
}

/// First homology from the pieces' presentations, two relations per edge
/// identifying boundary curves, and one free stable letter per cycle.
pub fn first_homology(g: &GraphDescription) -> AbelianGroup {
    let pieces: Vec<_> = g.nodes.iter().map(presentation).collect();
    let offsets: Vec<usize> = pieces
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.generators;
            Some(o)
        })
        .collect();
    let total: usize = pieces.iter().map(|p| p.generators).sum();
    let mut relations = Vec::new();
    for (p, &o) in pieces.iter().zip(&offsets) {
        for r in &p.relations {
            let mut row = vec![BigInt::zero(); total];
            row[o..o + p.generators].clone_from_slice(r);
            relations.push(row);
        }
    }
    let section = |(node, slot): (usize, u32)| offsets[node] + pieces[node].boundary_columns[slot as usize];
    let fiber = |(node, _): (usize, u32)| offsets[node] + pieces[node].fiber_column;
    for e in &g.edges {
        let (s_from, h_from) = (section(e.from), fiber(e.from));
        let (s_to, h_to) = (section(e.to), fiber(e.to));
        let BasisChange { a, b, c, d } = &e.gluing;
        // section -> a s' + c h', fiber -> b s' + d h'
        for (col, x, y) in [(s_from, a, c), (h_from, b, d)] {
            let mut row = vec![BigInt::zero(); total];
            row[col] += BigInt::one();
            row[s_to] -= x;
            row[h_to] -= y;
            relations.push(row);
        }
    }
    let mut group = presented_group(total, &relations);
    group.rank += g.edges.len() + 1 - g.nodes.len();
    group
}
