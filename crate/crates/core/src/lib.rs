//! Graphs of groups with trivial edge groups, their finite covers, and the
//! Euler-type invariant `χ_ρ(G₁ ∗ … ∗ Gₙ ∗ F_r) = 1 − r − n + Σ ρ(Gᵢ)`.
//!
//! Abstract factors carry a user-supplied exact value of `ρ`. Finite factors
//! are permutation groups with `ρ(G) = 1/|G|`, which makes every index
//! identity checkable by exhaustive enumeration of covers.

pub mod cli;
pub mod commensurability;
pub mod covers;
pub mod free_product;
pub mod graph;
pub mod iso;
pub mod notation;
pub mod perm;
pub mod rational;

pub use commensurability::{obstruction_check, witness_search, Mode, ObstructionReport, Verdict};
pub use covers::{ActionDatum, Cover, KuroshForm};
pub use free_product::{Factor, GraphOfGroups, Presentation, VertexGroup};
pub use graph::{star_graph, Graph};
pub use perm::{FinitePermGroup, Permutation};
pub use rational::Rational;

/// Resource bounds shared by every enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order `closure` will build.
    pub max_order: usize,
    /// Largest action degree `k`.
    pub max_degree: usize,
    /// Worker threads for enumeration; 0 lets rayon decide.
    pub workers: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 2000,
            max_degree: 7,
            workers: 0,
        }
    }
}

impl Limits {
    /// Runs `f` on a pool with the configured number of workers.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}
