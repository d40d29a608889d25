//! Finite oriented graphs with an edge involution.
//!
//! Every geometric edge is stored as two oriented edges `e` and `ē` that name
//! each other as partners. A loop at `v` is a pair of oriented edges, both
//! starting and ending at `v`. Unoriented counts are obtained by halving.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One oriented edge together with the id of its reverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub initial: String,
    pub terminal: String,
    pub partner: String,
}

/// The first clause of the graph invariants found to fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateEdge(String),
    UnknownVertex { edge: String, vertex: String },
    MissingPartner { edge: String, partner: String },
    SelfPartner(String),
    NotInvolution(String),
    OrientationMismatch(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateEdge(e) => write!(f, "edge id {e} occurs twice"),
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
            Violation::MissingPartner { edge, partner } => {
                write!(f, "edge {edge} names missing partner {partner}")
            }
            Violation::SelfPartner(e) => write!(f, "e ≠ ē fails for edge {e}"),
            Violation::NotInvolution(e) => write!(f, "e = ē̄ fails for edge {e}"),
            Violation::OrientationMismatch(e) => write!(f, "ι(e) = τ(ē) fails for edge {e}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(Violation),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("no edge with id {0}")]
    UnknownEdge(String),
}

/// A finite graph in the orientation-first sense: vertices plus oriented
/// edges closed under a fixed-point-free involution.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, Edge>,
    // Duplicate ids seen at construction; kept so `validate` can report them.
    duplicates: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl From<GraphRepr> for Graph {
    fn from(repr: GraphRepr) -> Self {
        Graph::from_parts(repr.vertices, repr.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            vertices: g.vertices.into_iter().collect(),
            edges: g.edges.into_values().collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from raw parts without checking the invariants; call
    /// [`Graph::validate`] to check them.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = String>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let mut map = BTreeMap::new();
        let mut duplicates = Vec::new();
        for e in edges {
            if map.contains_key(&e.id) {
                duplicates.push(e.id.clone());
            } else {
                map.insert(e.id.clone(), e);
            }
        }
        Graph {
            vertices: vertices.into_iter().collect(),
            edges: map,
            duplicates,
        }
    }

    pub fn with_vertices<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Self {
        Graph::from_parts(vertices.into_iter().map(Into::into), [])
    }

    pub fn add_vertex(&mut self, v: impl Into<String>) {
        self.vertices.insert(v.into());
    }

    /// Adds the geometric edge `{from, to}` as the oriented pair `id+`
    /// (from → to) and `id-` (to → from).
    pub fn add_edge_pair(&mut self, id: &str, from: &str, to: &str) {
        let fwd = format!("{id}+");
        let bwd = format!("{id}-");
        self.edges.insert(
            fwd.clone(),
            Edge {
                id: fwd.clone(),
                initial: from.to_owned(),
                terminal: to.to_owned(),
                partner: bwd.clone(),
            },
        );
        self.edges.insert(
            bwd.clone(),
            Edge {
                id: bwd,
                initial: to.to_owned(),
                terminal: from.to_owned(),
                partner: fwd,
            },
        );
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    /// Oriented edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn oriented_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if let Some(d) = self.duplicates.first() {
            return Err(Violation::DuplicateEdge(d.clone()));
        }
        for e in self.edges.values() {
            for v in [&e.initial, &e.terminal] {
                if !self.vertices.contains(v) {
                    return Err(Violation::UnknownVertex {
                        edge: e.id.clone(),
                        vertex: v.clone(),
                    });
                }
            }
            if e.partner == e.id {
                return Err(Violation::SelfPartner(e.id.clone()));
            }
            let Some(p) = self.edges.get(&e.partner) else {
                return Err(Violation::MissingPartner {
                    edge: e.id.clone(),
                    partner: e.partner.clone(),
                });
            };
            if p.partner != e.id {
                return Err(Violation::NotInvolution(e.id.clone()));
            }
            if e.initial != p.terminal {
                return Err(Violation::OrientationMismatch(e.id.clone()));
            }
        }
        Ok(())
    }

    fn ensure_valid(&self) -> Result<(), GraphError> {
        self.validate().map_err(GraphError::Invalid)
    }

    /// `|V| - |E|/2`, counting each geometric edge once.
    pub fn euler_characteristic(&self) -> Result<i64, GraphError> {
        self.ensure_valid()?;
        Ok(self.vertices.len() as i64 - (self.edges.len() / 2) as i64)
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        self.ensure_valid()?;
        let Some(start) = self.vertices.first() else {
            return Err(GraphError::Empty);
        };
        let mut adjacency: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in self.edges.values() {
            // The partner edge supplies the reverse direction.
            adjacency
                .entry(e.initial.as_str())
                .or_default()
                .push(e.terminal.as_str());
        }
        let mut seen = BTreeSet::from([start.as_str()]);
        let mut queue = VecDeque::from([start.as_str()]);
        while let Some(v) = queue.pop_front() {
            for &w in adjacency.get(v).into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.len() == self.vertices.len())
    }

    /// Rank of the fundamental group of a connected graph.
    pub fn free_rank(&self) -> Result<u64, GraphError> {
        if !self.is_connected()? {
            return Err(GraphError::Disconnected);
        }
        Ok((1 - self.euler_characteristic()?) as u64)
    }

    /// Replaces the geometric edge containing `edge_id` by two edges through
    /// a new vertex `mid`.
    pub fn subdivide(&self, edge_id: &str, mid: &str) -> Result<Graph, GraphError> {
        self.ensure_valid()?;
        let e = self
            .edges
            .get(edge_id)
            .ok_or_else(|| GraphError::UnknownEdge(edge_id.to_owned()))?
            .clone();
        let mut out = self.clone();
        out.edges.remove(&e.id);
        out.edges.remove(&e.partner);
        out.add_vertex(mid);
        out.add_edge_pair(&format!("{}/a", e.id), &e.initial, mid);
        out.add_edge_pair(&format!("{}/b", e.id), mid, &e.terminal);
        Ok(out)
    }
}

/// Name of vertex `i` in a star graph with `m` leaves; zero-padded so that
/// lexicographic order agrees with numeric order.
pub fn star_vertex(i: usize, m: usize) -> String {
    let width = m.to_string().len();
    format!("v{i:0width$}")
}

/// Vertices `v0..vm`, an edge `{v0, vi}` for each leaf and `s` loops at `v0`.
pub fn star_graph(m: usize, s: usize) -> Graph {
    let hub = star_vertex(0, m);
    let mut g = Graph::with_vertices((0..=m).map(|i| star_vertex(i, m)));
    for i in 1..=m {
        g.add_edge_pair(&format!("e{i}"), &hub, &star_vertex(i, m));
    }
    for j in 1..=s {
        g.add_edge_pair(&format!("a{j}"), &hub, &hub);
    }
    g
}
