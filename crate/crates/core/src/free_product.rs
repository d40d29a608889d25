//! Free-product presentations `G₁ ∗ … ∗ Gₙ ∗ F_r`, graphs of groups with
//! trivial edge groups, and the invariant `χ_ρ` on both.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{star_graph, star_vertex, Graph, GraphError};
use crate::perm::FinitePermGroup;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeProductError {
    #[error("factor {0} is trivial; trivial factors are absorbed, not listed")]
    TrivialFactor(String),
    #[error("factor name {0} is used for two different groups")]
    ConflictingFactor(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} has no group assigned")]
    MissingVertex(String),
    #[error("group assigned to unknown vertex {0}")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    /// A group known only through its invariant value.
    Abstract {
        rho: Rational,
        one_ended_asserted: bool,
    },
    /// A concrete finite group; `ρ = 1/|G|`.
    Finite(FinitePermGroup),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub kind: FactorKind,
}

impl Factor {
    pub fn new_abstract(name: impl Into<String>, rho: Rational, one_ended_asserted: bool) -> Self {
        Factor {
            name: name.into(),
            kind: FactorKind::Abstract {
                rho,
                one_ended_asserted,
            },
        }
    }

    pub fn finite(name: impl Into<String>, group: FinitePermGroup) -> Self {
        Factor {
            name: name.into(),
            kind: FactorKind::Finite(group),
        }
    }

    pub fn rho(&self) -> Rational {
        match &self.kind {
            FactorKind::Abstract { rho, .. } => rho.clone(),
            FactorKind::Finite(g) => Rational::reciprocal_of(g.order() as u64),
        }
    }

    pub fn group(&self) -> Option<&FinitePermGroup> {
        match &self.kind {
            FactorKind::Finite(g) => Some(g),
            FactorKind::Abstract { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.group().is_some()
    }

    /// Only finite factors can be recognised as trivial.
    pub fn is_trivial(&self) -> bool {
        self.group().is_some_and(FinitePermGroup::is_trivial)
    }

    pub fn one_ended_asserted(&self) -> bool {
        matches!(
            self.kind,
            FactorKind::Abstract {
                one_ended_asserted: true,
                ..
            }
        )
    }
}

fn check_names<'a>(factors: impl IntoIterator<Item = &'a Factor>) -> Result<(), FreeProductError> {
    let mut seen: BTreeMap<&str, &Factor> = BTreeMap::new();
    for f in factors {
        if let Some(prev) = seen.insert(&f.name, f) {
            if prev.kind != f.kind {
                return Err(FreeProductError::ConflictingFactor(f.name.clone()));
            }
        }
    }
    Ok(())
}

/// `G₁ ∗ … ∗ Gₙ ∗ F_r` with every listed factor nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    factors: Vec<Factor>,
    free_rank: u64,
}

impl Presentation {
    pub fn new(factors: Vec<Factor>, free_rank: u64) -> Result<Self, FreeProductError> {
        if let Some(f) = factors.iter().find(|f| f.is_trivial()) {
            return Err(FreeProductError::TrivialFactor(f.name.clone()));
        }
        check_names(&factors)?;
        Ok(Presentation { factors, free_rank })
    }

    pub fn free(rank: u64) -> Self {
        Presentation {
            factors: Vec::new(),
            free_rank: rank,
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn free_rank(&self) -> u64 {
        self.free_rank
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn all_finite(&self) -> bool {
        self.factors.iter().all(Factor::is_finite)
    }

    /// `1 − r − n + Σ ρ(Gᵢ)`.
    pub fn chi_rho(&self) -> Rational {
        let n = self.factors.len() as i64;
        let sum: Rational = self.factors.iter().map(Factor::rho).sum();
        Rational::from_integer(1 - self.free_rank as i64 - n) + sum
    }

    /// The star-shaped graph of groups: trivial hub `v0`, factor `i` on the
    /// leaf `vi`, and one loop at the hub per free generator.
    pub fn as_star_gog(&self) -> GraphOfGroups {
        let m = self.factors.len();
        let graph = star_graph(m, self.free_rank as usize);
        let mut assignment = BTreeMap::from([(star_vertex(0, m), VertexGroup::Trivial)]);
        for (i, f) in self.factors.iter().enumerate() {
            assignment.insert(star_vertex(i + 1, m), VertexGroup::Factor(f.clone()));
        }
        GraphOfGroups { graph, assignment }
    }

    /// Compact form such as `C2 * C3 * F1`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.name.clone()).collect();
        if self.free_rank > 0 || parts.is_empty() {
            parts.push(format!("F{}", self.free_rank));
        }
        parts.join(" * ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexGroup {
    Trivial,
    Factor(Factor),
}

impl VertexGroup {
    fn nontrivial(&self) -> Option<&Factor> {
        match self {
            VertexGroup::Factor(f) if !f.is_trivial() => Some(f),
            _ => None,
        }
    }
}

/// A connected graph with a group on every vertex and trivial edge groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    graph: Graph,
    assignment: BTreeMap<String, VertexGroup>,
}

impl GraphOfGroups {
    pub fn new(
        graph: Graph,
        assignment: BTreeMap<String, VertexGroup>,
    ) -> Result<Self, FreeProductError> {
        if !graph.is_connected()? {
            return Err(GraphError::Disconnected.into());
        }
        if let Some(v) = graph.vertices().find(|v| !assignment.contains_key(*v)) {
            return Err(FreeProductError::MissingVertex(v.to_owned()));
        }
        if let Some(v) = assignment.keys().find(|v| !graph.contains_vertex(v)) {
            return Err(FreeProductError::UnknownVertex(v.clone()));
        }
        check_names(assignment.values().filter_map(|g| match g {
            VertexGroup::Factor(f) => Some(f),
            VertexGroup::Trivial => None,
        }))?;
        Ok(GraphOfGroups { graph, assignment })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn assignment(&self) -> &BTreeMap<String, VertexGroup> {
        &self.assignment
    }

    fn nontrivial_factors(&self) -> impl Iterator<Item = &Factor> {
        self.assignment.values().filter_map(VertexGroup::nontrivial)
    }

    /// `χ(Γ) − n + Σ ρ(Gᵢ)` over the nontrivial vertex groups.
    pub fn chi_rho(&self) -> Result<Rational, FreeProductError> {
        let chi = self.graph.euler_characteristic()?;
        let n = self.nontrivial_factors().count() as i64;
        let sum: Rational = self.nontrivial_factors().map(Factor::rho).sum();
        Ok(Rational::from_integer(chi - n) + sum)
    }

    /// Nontrivial vertex groups in vertex order, plus the rank of `π₁(Γ)`.
    pub fn normal_form(&self) -> Result<Presentation, FreeProductError> {
        let rank = self.graph.free_rank()?;
        Presentation::new(self.nontrivial_factors().cloned().collect(), rank)
    }

    /// Inserts a trivial-group vertex `mid` in the middle of an edge.
    pub fn subdivide(&self, edge_id: &str, mid: &str) -> Result<Self, FreeProductError> {
        let graph = self.graph.subdivide(edge_id, mid)?;
        let mut assignment = self.assignment.clone();
        assignment.insert(mid.to_owned(), VertexGroup::Trivial);
        GraphOfGroups::new(graph, assignment)
    }
}

/// A random connected graph of groups on `1..=max_vertices` vertices: a
/// random spanning tree, a few extra edges and loops, and groups drawn from
/// a small pool of finite and abstract factors (some trivial).
pub fn random_graph_of_groups<R: Rng>(rng: &mut R, max_vertices: usize) -> GraphOfGroups {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let names: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    let mut graph = Graph::with_vertices(names.iter().cloned());
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        graph.add_edge_pair(&format!("t{i}"), &names[parent], &names[order[i]]);
    }
    for j in 0..rng.gen_range(0..=4) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        graph.add_edge_pair(&format!("x{j}"), &names[a], &names[b]);
    }

    let mut assignment = BTreeMap::new();
    for v in &names {
        let group = match rng.gen_range(0..7) {
            0 | 1 => VertexGroup::Trivial,
            2 => VertexGroup::Factor(Factor::finite("C1", FinitePermGroup::cyclic(1))),
            3 => VertexGroup::Factor(Factor::finite("C2", FinitePermGroup::cyclic(2))),
            4 => VertexGroup::Factor(Factor::finite("C3", FinitePermGroup::cyclic(3))),
            5 => VertexGroup::Factor(Factor::finite("S3", FinitePermGroup::symmetric(3))),
            _ => {
                let rho = Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=4));
                VertexGroup::Factor(Factor::new_abstract(format!("A[{rho}]"), rho, true))
            }
        };
        assignment.insert(v.clone(), group);
    }
    GraphOfGroups::new(graph, assignment).expect("random graph of groups is well formed")
}
