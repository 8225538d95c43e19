//! Exact clique covering/partition optima for desk-scale graphs.
//!
//! [`ExactSolver`] runs a branch and bound over the lowest-indexed uncovered
//! edge. The [`oracle`] submodule is a deliberately plain exhaustive search
//! used to cross-check it on graphs with at most eight vertices.

mod instance;
pub mod oracle;
mod search;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::covers::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use oracle::{oracle_cc, oracle_cp, oracle_scc, oracle_scp, oracle_value, ORACLE_MAX_N};

/// Default vertex cap for exact solving.
pub const DEFAULT_MAX_N: usize = 16;

/// Edge sets are 128-bit masks, so `C(n, 2) <= 128` bounds every cap.
pub const HARD_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Fewest cliques in a covering.
    Cc,
    /// Fewest cliques in a partition.
    Cp,
    /// Smallest sigma over coverings.
    Scc,
    /// Smallest sigma over partitions.
    Scp,
    /// Smallest sigma over coverings with exactly `cc(G)` cliques.
    SccPrime,
}

impl Objective {
    pub const ALL: [Objective; 5] = [
        Objective::Cc,
        Objective::Cp,
        Objective::Scc,
        Objective::Scp,
        Objective::SccPrime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Cc => "cc",
            Objective::Cp => "cp",
            Objective::Scc => "scc",
            Objective::Scp => "scp",
            Objective::SccPrime => "scc_prime",
        }
    }

    pub fn is_partition(self) -> bool {
        matches!(self, Objective::Cp | Objective::Scp)
    }

    pub fn counts_sigma(self) -> bool {
        matches!(self, Objective::Scc | Objective::Scp | Objective::SccPrime)
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "cc" => Ok(Objective::Cc),
            "cp" => Ok(Objective::Cp),
            "scc" => Ok(Objective::Scc),
            "scp" => Ok(Objective::Scp),
            "scc_prime" | "scc-prime" | "sccprime" | "scc'" => Ok(Objective::SccPrime),
            other => Err(format!("unknown objective `{other}` (expected cc, cp, scc, scp or scc-prime)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub objective: Objective,
    pub value: usize,
    pub witness: CliqueCover,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Branch-and-bound solver with a vertex cap.
#[derive(Clone, Debug)]
pub struct ExactSolver {
    max_n: usize,
}

impl Default for ExactSolver {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N }
    }
}

impl ExactSolver {
    /// Solver refusing graphs above `max_n` vertices; `max_n` may not exceed [`HARD_MAX_N`].
    pub fn with_max_n(max_n: usize) -> Result<Self> {
        if max_n > HARD_MAX_N {
            return Err(Error::premise(format!(
                "exact vertex cap {max_n} exceeds the supported maximum {HARD_MAX_N}"
            )));
        }
        Ok(Self { max_n })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn solve(&self, g: &Graph, objective: Objective) -> Result<SolveResult> {
        if g.n() > self.max_n {
            return Err(Error::TooLarge { n: g.n(), cap: self.max_n });
        }
        let start = std::time::Instant::now();
        let (value, witness, nodes) = search::solve(g, objective);
        Ok(SolveResult {
            objective,
            value,
            witness,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
        })
    }
}

pub fn solve_cc(g: &Graph) -> Result<SolveResult> {
    ExactSolver::default().solve(g, Objective::Cc)
}

pub fn solve_cp(g: &Graph) -> Result<SolveResult> {
    ExactSolver::default().solve(g, Objective::Cp)
}

pub fn solve_scc(g: &Graph) -> Result<SolveResult> {
    ExactSolver::default().solve(g, Objective::Scc)
}

pub fn solve_scp(g: &Graph) -> Result<SolveResult> {
    ExactSolver::default().solve(g, Objective::Scp)
}

pub fn solve_scc_prime(g: &Graph) -> Result<SolveResult> {
    ExactSolver::default().solve(g, Objective::SccPrime)
}

/// Sum over vertices of the largest stable set in the neighbourhood.
///
/// Any two neighbours of `u` in a stable set need distinct cliques through
/// `u`, so this bounds the valency of every vertex and hence `scc(g)`.
pub fn valency_lower_bound(g: &Graph) -> usize {
    (0..g.n())
        .map(|u| {
            let alpha = g.max_stable_set_in_neighborhood(u);
            alpha.max(usize::from(g.degree(u) > 0))
        })
        .sum()
}
