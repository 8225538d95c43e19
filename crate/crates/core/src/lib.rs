//! Sigma clique cover and partition numbers.
//!
//! The sigma clique cover number `scc(G)` is the least total size of a family
//! of cliques covering every edge of `G`; `scp(G)` is the same over clique
//! partitions. This crate provides
//!
//! - [`graph`]: bitset graphs, maximal cliques, stable sets;
//! - [`covers`]: clique covers/partitions, verification and valency statistics;
//! - [`exact`]: exact `cc`, `cp`, `scc`, `scp`, `scc'` for up to 16 vertices,
//!   with an independent exhaustive oracle;
//! - [`randomized`]: the sample-and-prune randomized covering;
//! - [`constructions`]: `G_n`, complete multipartite graphs, OA(d, d+1) and
//!   the optimal multipartite partitions it yields;
//! - [`bounds`]: closed-form bounds and their certificates;
//! - [`setsystem`]: the Bollobás-pair and set-family views of coverings;
//! - [`io`]: edge-list, DIMACS, cover and family text formats.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod covers;
mod error;
pub mod exact;
pub mod field;
pub mod graph;
pub mod io;
pub mod randomized;
pub mod setsystem;

pub use bitset::VertexSet;
pub use covers::{CliqueCover, CoverMode, CoverStats};
pub use error::{Error, Result};
pub use exact::{ExactSolver, Objective, SolveResult};
pub use graph::Graph;
