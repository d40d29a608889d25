//! Finite-index covers of a free product presented as a star-shaped graph
//! of groups.
//!
//! An index-`k` subgroup corresponds to a transitive action of the base group
//! on `{0..k}` with basepoint `0`: one homomorphism into `Sym(k)` per factor
//! and one permutation per free letter. The induced covering graph has the
//! `k` points over the trivial hub, one vertex per orbit over each factor
//! vertex (carrying the point stabilizer as its group), an edge from every
//! point to its orbit for each factor, and an edge `p → σ(p)` for each free
//! letter `σ`.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::free_product::{Factor, FreeProductError, Presentation};
use crate::graph::{Graph, GraphError};
use crate::iso::{IsoClassifier, IsoLabel};
use crate::perm::{
    is_transitive, orbits, symmetric_elements, Action, FinitePermGroup, PermError, Permutation,
};
use crate::rational::Rational;
use crate::Limits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("factor {0} is abstract; covers need concrete finite factors")]
    AbstractFactor(String),
    #[error("action datum does not act transitively on 1..={0}")]
    Intransitive(usize),
    #[error("images for factor {0} do not define a homomorphism")]
    NotHomomorphism(String),
    #[error("action datum has the wrong shape: {0}")]
    Shape(String),
    #[error("index identity needs at least two factors or free letters (m = {m}, s = {s})")]
    DegenerateBase { m: usize, s: u64 },
    #[error("claimed indices for factor {factor} sum to {sum}, expected {k}")]
    IndexSum { factor: String, sum: u64, k: u64 },
    #[error("factor {0} has ρ = 0, so the per-factor sums cannot force the partition")]
    ZeroRho(String),
    #[error("claimed pieces force a negative free rank {0}")]
    NegativeRank(i64),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    FreeProduct(#[from] FreeProductError),
}

/// A pointed action of the base group on `{0..k}` (basepoint `0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ActionDatum {
    pub k: usize,
    /// Generator images, one list per base factor.
    pub factor_actions: Vec<Action>,
    /// One permutation per free letter.
    pub letter_images: Vec<Permutation>,
}

impl ActionDatum {
    /// The trivial index-1 datum for `base`.
    pub fn identity(base: &Presentation) -> Self {
        let id = Permutation::identity(1);
        ActionDatum {
            k: 1,
            factor_actions: base
                .factors()
                .iter()
                .map(|f| vec![id.clone(); f.group().map_or(1, |g| g.generators().len())])
                .collect(),
            letter_images: vec![id; base.free_rank() as usize],
        }
    }

    pub fn images(&self) -> impl Iterator<Item = &Permutation> {
        self.factor_actions
            .iter()
            .flatten()
            .chain(&self.letter_images)
    }

    pub fn is_transitive(&self) -> bool {
        let all: Vec<Permutation> = self.images().cloned().collect();
        is_transitive(&all, self.k)
    }

    /// Every image conjugated by `c`, i.e. points renamed `x ↦ c(x)`.
    pub fn relabel(&self, c: &Permutation) -> ActionDatum {
        ActionDatum {
            k: self.k,
            factor_actions: self
                .factor_actions
                .iter()
                .map(|a| a.iter().map(|p| p.conjugate_by(c)).collect())
                .collect(),
            letter_images: self
                .letter_images
                .iter()
                .map(|p| p.conjugate_by(c))
                .collect(),
        }
    }

    /// Renames points in the order a breadth-first search from `0` first
    /// reaches them, scanning images in datum order. Two transitive data are
    /// related by a basepoint-fixing relabelling iff their standard forms
    /// agree. `None` if the datum is intransitive.
    pub fn standardized(&self) -> Option<ActionDatum> {
        let images: Vec<&Permutation> = self.images().collect();
        let mut label = vec![usize::MAX; self.k];
        let mut order = vec![0usize];
        label[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for p in &images {
                let y = p.apply(x);
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
            i += 1;
        }
        if order.len() != self.k {
            return None;
        }
        Some(self.relabel(&Permutation::from_images(label).expect("bfs labelling")))
    }

    /// Whether the datum is transitive and already in standard form.
    pub fn is_standard(&self) -> bool {
        is_standard_images(&self.images().collect::<Vec<_>>(), self.k)
    }
}

/// Allocation-free version of `standardized() == Some(self)`: a breadth-first
/// scan must meet the points in the order `0, 1, 2, …`.
fn is_standard_images(images: &[&Permutation], k: usize) -> bool {
    let mut next = 1;
    for x in 0..k {
        if x >= next {
            return false;
        }
        for p in images {
            let y = p.apply(x);
            if y >= next {
                if y != next {
                    return false;
                }
                next += 1;
            }
        }
    }
    next == k
}

/// One vertex over a factor vertex: an orbit and its point stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Sorted 0-based points.
    pub points: Vec<usize>,
    /// Stabilizer of the orbit's smallest point.
    pub stabilizer: FinitePermGroup,
}

impl OrbitRecord {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorFiber {
    pub factor: String,
    pub orbits: Vec<OrbitRecord>,
}

/// The covering graph of groups induced by an action datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub base: Presentation,
    pub datum: ActionDatum,
    pub cover_graph: Graph,
    pub fibers: Vec<FactorFiber>,
    /// Rank of `π₁` of the covering graph.
    pub cover_rank: u64,
    /// All vertices over factor vertices, free orbits included.
    pub fiber_count: usize,
}

impl Cover {
    pub fn k(&self) -> usize {
        self.datum.k
    }
}

fn pad(i: usize, k: usize) -> String {
    let width = k.to_string().len();
    format!("{i:0width$}")
}

/// Builds the covering graph for `datum` over the star graph of `base`
/// without checking homomorphism or transitivity. Vertices over the hub are
/// `p1..pk`; the `t`-th orbit of factor `i` is `f{i}.{t}`.
pub fn covering_graph(base: &Presentation, datum: &ActionDatum) -> Graph {
    let k = datum.k;
    let point = |x: usize| format!("p{}", pad(x + 1, k));
    let mut g = Graph::with_vertices((0..k).map(point));
    for (i, action) in datum.factor_actions.iter().enumerate() {
        let fiber = orbits(action, k);
        for (t, orbit) in fiber.iter().enumerate() {
            let v = format!("f{}.{}", i + 1, pad(t + 1, k));
            g.add_vertex(v.clone());
            for &x in orbit {
                g.add_edge_pair(&format!("e{}.{}", i + 1, pad(x + 1, k)), &point(x), &v);
            }
        }
    }
    for (j, sigma) in datum.letter_images.iter().enumerate() {
        for x in 0..k {
            g.add_edge_pair(
                &format!("a{}.{}", j + 1, pad(x + 1, k)),
                &point(x),
                &point(sigma.apply(x)),
            );
        }
    }
    debug_assert_eq!(base.factor_count(), datum.factor_actions.len());
    g
}

fn finite_groups(base: &Presentation) -> Result<Vec<&FinitePermGroup>, CoverError> {
    base.factors()
        .iter()
        .map(|f| {
            f.group()
                .ok_or_else(|| CoverError::AbstractFactor(f.name.clone()))
        })
        .collect()
}

fn check_shape(base: &Presentation, datum: &ActionDatum) -> Result<(), CoverError> {
    let k = datum.k;
    if k == 0 {
        return Err(CoverError::Shape("index must be positive".into()));
    }
    if datum.factor_actions.len() != base.factor_count() {
        return Err(CoverError::Shape(format!(
            "{} factor actions for {} factors",
            datum.factor_actions.len(),
            base.factor_count()
        )));
    }
    if datum.letter_images.len() as u64 != base.free_rank() {
        return Err(CoverError::Shape(format!(
            "{} letter images for free rank {}",
            datum.letter_images.len(),
            base.free_rank()
        )));
    }
    if let Some(p) = datum.images().find(|p| p.degree() != k) {
        return Err(CoverError::Shape(format!(
            "image {p} has degree {} ≠ {k}",
            p.degree()
        )));
    }
    Ok(())
}

pub fn build_cover(
    base: &Presentation,
    datum: ActionDatum,
    limits: &Limits,
) -> Result<Cover, CoverError> {
    let groups = finite_groups(base)?;
    check_shape(base, &datum)?;
    for ((g, action), f) in groups.iter().zip(&datum.factor_actions).zip(base.factors()) {
        if action.len() != g.generators().len() || !g.is_homomorphism(action) {
            return Err(CoverError::NotHomomorphism(f.name.clone()));
        }
    }
    if !datum.is_transitive() {
        return Err(CoverError::Intransitive(datum.k));
    }

    let mut fibers = Vec::with_capacity(groups.len());
    for ((g, action), f) in groups.iter().zip(&datum.factor_actions).zip(base.factors()) {
        let orbits = g
            .act_orbits(action)?
            .into_iter()
            .map(|points| {
                let stabilizer = g.point_stabilizer(action, points[0], limits.max_order)?;
                Ok(OrbitRecord { points, stabilizer })
            })
            .collect::<Result<Vec<_>, PermError>>()?;
        fibers.push(FactorFiber {
            factor: f.name.clone(),
            orbits,
        });
    }
    let cover_graph = covering_graph(base, &datum);
    let cover_rank = cover_graph.free_rank()?;
    let fiber_count = fibers.iter().map(|f| f.orbits.len()).sum();
    Ok(Cover {
        base: base.clone(),
        datum,
        cover_graph,
        fibers,
        cover_rank,
        fiber_count,
    })
}

/// `1 − r − n + Σ ρ(stabilizer)` over every fiber vertex, free orbits
/// included.
pub fn chi_rho_cover(c: &Cover) -> Rational {
    let sum: Rational = c
        .fibers
        .iter()
        .flat_map(|f| &f.orbits)
        .map(|o| Rational::reciprocal_of(o.stabilizer.order() as u64))
        .sum();
    Rational::from_integer(1 - c.cover_rank as i64 - c.fiber_count as i64) + sum
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuroshFactor {
    /// Position of the base factor this group sits inside.
    pub base_factor: usize,
    pub label: IsoLabel,
    /// Index in the base factor (the orbit size).
    pub index: usize,
    #[serde(skip)]
    pub group: Option<FinitePermGroup>,
}

/// Free-product normal form of a cover's fundamental group: the nontrivial
/// stabilizers plus a free group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuroshForm {
    pub factors: Vec<KuroshFactor>,
    pub free_rank: u64,
}

/// Isomorphism type of a Kurosh form: factor labels (with indices erased)
/// and the free rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KuroshKey {
    pub labels: Vec<IsoLabel>,
    pub free_rank: u64,
}

impl KuroshKey {
    pub fn chi_rho(&self) -> Rational {
        let sum: Rational = self
            .labels
            .iter()
            .map(|l| Rational::reciprocal_of(l.order as u64))
            .sum();
        Rational::from_integer(1 - self.free_rank as i64 - self.labels.len() as i64) + sum
    }

    pub fn is_free(&self) -> bool {
        self.labels.is_empty()
    }
}

impl KuroshForm {
    pub fn key(&self) -> KuroshKey {
        let mut labels: Vec<IsoLabel> = self.factors.iter().map(|f| f.label.clone()).collect();
        labels.sort();
        KuroshKey {
            labels,
            free_rank: self.free_rank,
        }
    }

    pub fn chi_rho(&self) -> Rational {
        self.key().chi_rho()
    }

    /// The form as a presentation of finite factors, named `K1, K2, …`.
    pub fn presentation(&self) -> Result<Presentation, FreeProductError> {
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let g = f.group.clone().expect("Kurosh factor built from a cover");
                Factor::finite(format!("K{}", i + 1), g)
            })
            .collect();
        Presentation::new(factors, self.free_rank)
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.label.short_name()).collect();
        if self.free_rank > 0 || parts.is_empty() {
            parts.push(format!("F{}", self.free_rank));
        }
        parts.join(" * ")
    }
}

/// Drops free orbits; every other orbit contributes its stabilizer.
pub fn kurosh(c: &Cover, classifier: &mut IsoClassifier) -> KuroshForm {
    let factors = c
        .fibers
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.orbits.iter().map(move |o| (i, o)))
        .filter(|(_, o)| !o.stabilizer.is_trivial())
        .map(|(i, o)| KuroshFactor {
            base_factor: i,
            label: classifier.label(&o.stabilizer),
            index: o.size(),
            group: Some(o.stabilizer.clone()),
        })
        .collect();
    KuroshForm {
        factors,
        free_rank: c.cover_rank,
    }
}

/// Both sides of an exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equality<T> {
    pub lhs: T,
    pub rhs: T,
    pub passed: bool,
}

impl<T: PartialEq> Equality<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        let passed = lhs == rhs;
        Equality { lhs, rhs, passed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSumCheck {
    pub factor: String,
    /// `Σ ρ(stabilizer)` over the fiber.
    #[serde(flatten)]
    pub check: Equality<Rational>,
}

/// Per base factor: the stabilizer `ρ` values over its fiber sum to `k·ρ(Gᵢ)`.
pub fn verify_obs_sum(c: &Cover) -> Vec<FactorSumCheck> {
    let k = Rational::from_integer(c.k() as i64);
    c.fibers
        .iter()
        .zip(c.base.factors())
        .map(|(fiber, factor)| {
            let lhs: Rational = fiber
                .orbits
                .iter()
                .map(|o| Rational::reciprocal_of(o.stabilizer.order() as u64))
                .sum();
            FactorSumCheck {
                factor: fiber.factor.clone(),
                check: Equality::new(lhs, &k * &factor.rho()),
            }
        })
        .collect()
}

/// `χ_ρ(cover) = k · χ_ρ(base)`.
pub fn verify_multiplicativity(c: &Cover) -> Equality<Rational> {
    Equality::new(
        chi_rho_cover(c),
        Rational::from_integer(c.k() as i64) * c.base.chi_rho(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexIdentity {
    /// `k·(1 − m − s)` against `1 − r − n`.
    #[serde(flatten)]
    pub check: Equality<i64>,
    /// True when the base has free letters, i.e. the identity is used in
    /// its extended form.
    pub extended: bool,
}

/// `k·(1 − m − s) = 1 − r − n` with `n` the unreduced fiber count.
pub fn verify_index_identity(c: &Cover) -> Result<IndexIdentity, CoverError> {
    let m = c.base.factor_count();
    let s = c.base.free_rank();
    if m as u64 + s < 2 {
        return Err(CoverError::DegenerateBase { m, s });
    }
    let lhs = c.k() as i64 * (1 - m as i64 - s as i64);
    let rhs = 1 - c.cover_rank as i64 - c.fiber_count as i64;
    Ok(IndexIdentity {
        check: Equality::new(lhs, rhs),
        extended: s > 0,
    })
}

/// Bookkeeping for a cover known only through the indices of its pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicCover {
    pub k: u64,
    /// `(index, ρ)` for each claimed piece, grouped by base factor.
    pub pieces: Vec<Vec<(u64, Rational)>>,
    pub fiber_count: u64,
    pub cover_rank: u64,
    pub presentation: Presentation,
    pub multiplicativity: Equality<Rational>,
}

/// Treats each claimed index `d` over factor `Gᵢ` as a subgroup with
/// `ρ = d·ρ(Gᵢ)`, checks the indices over each factor sum to `k`, and solves
/// `k·(1 − m − s) = 1 − r − n` for the free rank `r` of the cover.
pub fn verify_symbolic_cover(
    base: &Presentation,
    claimed: &[Vec<u64>],
    k: u64,
) -> Result<SymbolicCover, CoverError> {
    let m = base.factor_count();
    let s = base.free_rank();
    if m as u64 + s < 2 {
        return Err(CoverError::DegenerateBase { m, s });
    }
    if k == 0 {
        return Err(CoverError::Shape("index must be positive".into()));
    }
    if claimed.len() != m {
        return Err(CoverError::Shape(format!(
            "{} claimed partitions for {m} factors",
            claimed.len()
        )));
    }
    for f in base.factors() {
        if f.rho().is_zero() {
            return Err(CoverError::ZeroRho(f.name.clone()));
        }
    }
    let mut pieces = Vec::with_capacity(m);
    let mut factors = Vec::new();
    for (f, indices) in base.factors().iter().zip(claimed) {
        if indices.contains(&0) {
            return Err(CoverError::Shape(format!(
                "zero index claimed over {}",
                f.name
            )));
        }
        let sum: u64 = indices.iter().sum();
        if sum != k {
            return Err(CoverError::IndexSum {
                factor: f.name.clone(),
                sum,
                k,
            });
        }
        let mut row = Vec::new();
        for (j, &d) in indices.iter().enumerate() {
            let rho = Rational::from_integer(d as i64) * f.rho();
            factors.push(Factor::new_abstract(
                format!("{}[{}:{}]", f.name, j + 1, d),
                rho.clone(),
                f.one_ended_asserted(),
            ));
            row.push((d, rho));
        }
        pieces.push(row);
    }
    let n = factors.len() as i64;
    let rank = 1 - n - k as i64 * (1 - m as i64 - s as i64);
    if rank < 0 {
        return Err(CoverError::NegativeRank(rank));
    }
    let presentation = Presentation::new(factors, rank as u64)?;
    let multiplicativity = Equality::new(
        presentation.chi_rho(),
        Rational::from_integer(k as i64) * base.chi_rho(),
    );
    Ok(SymbolicCover {
        k,
        pieces,
        fiber_count: n as u64,
        cover_rank: rank as u64,
        presentation,
        multiplicativity,
    })
}

/// Every index-`k` subgroup of a finite-factor free product, as covers.
///
/// Candidates are all combinations of factor homomorphisms into `Sym(k)`
/// and letter permutations; a candidate is kept iff it is transitive and in
/// breadth-first standard form, which picks exactly one datum per
/// basepoint-preserving relabelling class. Output is sorted by datum.
pub fn enumerate_covers(
    base: &Presentation,
    k: usize,
    limits: &Limits,
) -> Result<Vec<Cover>, CoverError> {
    let groups = finite_groups(base)?;
    if k == 0 {
        return Err(CoverError::Shape("index must be positive".into()));
    }
    if k > limits.max_degree {
        return Err(PermError::DegreeBound {
            k,
            bound: limits.max_degree,
        }
        .into());
    }
    limits.install(|| {
        let mut axes: Vec<Vec<Action>> = Vec::new();
        for g in &groups {
            axes.push(g.enumerate_actions(k, limits)?);
        }
        let sym: Vec<Action> = symmetric_elements(k).into_iter().map(|p| vec![p]).collect();
        for _ in 0..base.free_rank() {
            axes.push(sym.clone());
        }
        let m = groups.len();
        let radices: Vec<usize> = axes.iter().map(Vec::len).collect();
        let total: usize = radices.iter().product();

        let mut covers: Vec<Cover> = (0..total)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut pick = Vec::with_capacity(radices.len());
                for &r in radices.iter().rev() {
                    pick.push(idx % r);
                    idx /= r;
                }
                pick.reverse();
                let images: Vec<&Permutation> = pick
                    .iter()
                    .zip(&axes)
                    .flat_map(|(&i, axis)| axis[i].iter())
                    .collect();
                if !is_standard_images(&images, k) {
                    return None;
                }
                let datum = ActionDatum {
                    k,
                    factor_actions: (0..m).map(|a| axes[a][pick[a]].clone()).collect(),
                    letter_images: (m..axes.len())
                        .map(|a| axes[a][pick[a]][0].clone())
                        .collect(),
                };
                Some(build_cover(base, datum, limits))
            })
            .collect::<Result<_, _>>()?;
        covers.sort_by(|a, b| a.datum.cmp(&b.datum));
        Ok(covers)
    })
}

/// Covers for every index `1..=k_max`, grouped by index.
pub fn enumerate_covers_up_to(
    base: &Presentation,
    k_max: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, Vec<Cover>>, CoverError> {
    (1..=k_max)
        .map(|k| Ok((k, enumerate_covers(base, k, limits)?)))
        .collect()
}

/// Relabellings of `{0..k}` that fix `0`, lexicographically.
pub fn basepoint_relabellings(k: usize) -> Vec<Permutation> {
    (1..k)
        .permutations(k.saturating_sub(1))
        .map(|rest| {
            let mut images = vec![0];
            images.extend(rest);
            Permutation::from_images(images).expect("relabelling")
        })
        .collect()
}

/// Lexicographically least relabelling of `datum` over all basepoint-fixing
/// relabellings. Factorial in `k`; a brute-force reference for the
/// breadth-first standard form.
pub fn lexmin_form(datum: &ActionDatum) -> ActionDatum {
    basepoint_relabellings(datum.k)
        .iter()
        .map(|c| datum.relabel(c))
        .min()
        .expect("at least the identity relabelling")
}
