//! Randomized clique covering for graphs whose complement has small maximum degree.
//!
//! Each round samples every vertex independently with probability `p` and
//! then drops, all at once, every sampled vertex that has a non-neighbour in
//! the sample; the survivors form a clique. After `t` rounds the edges left
//! uncovered are added as 2-cliques. With `d - 1` the maximum degree of the
//! complement, the default schedule is `p = 1/d` and
//! `t = ceil(e^2 d^2 ln((n-1)/(d-1)))`, and the expected sigma is at most
//! `(e^2 + 1) n d ceil(ln((n-1)/(d-1)))`.
//!
//! Reproducibility: all randomness comes from [`ChaCha8Rng`] seeded with
//! [`stream_seed`]`(seed, trial)`, where trial 0 is the plain
//! [`random_cover`] call. A vertex is sampled when the top 53 bits of the
//! next `u64`, read as a fraction in `[0, 1)`, are below `p`; vertices are
//! visited in increasing id order.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::bounds;
use crate::covers::{CliqueCover, CoverMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundsPolicy {
    PaperDefault,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomCoverConfig {
    pub p: f64,
    pub rounds: u64,
    pub seed: u64,
    pub rounds_policy: RoundsPolicy,
    /// Set for complete graphs, which are covered by one clique.
    pub single_clique: bool,
}

impl RandomCoverConfig {
    /// An explicit schedule. `rounds = 0` is accepted and yields the edge partition.
    pub fn explicit(p: f64, rounds: u64, seed: u64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::premise(format!("sampling probability must lie in (0, 1); got {p}")));
        }
        Ok(Self {
            p,
            rounds,
            seed,
            rounds_policy: RoundsPolicy::Explicit,
            single_clique: false,
        })
    }
}

/// `d = Δ(complement) + 1`.
pub fn complement_degree_parameter(g: &Graph) -> usize {
    let n = g.n();
    (0..n).map(|u| n - 1 - g.degree(u)).max().unwrap_or(0) + 1
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    if let Some(u) = (0..g.n()).find(|&u| g.degree(u) == 0) {
        return Err(Error::premise(format!(
            "vertex {u} is isolated; the randomized covering needs a graph without isolated vertices"
        )));
    }
    Ok(())
}

/// Number of rounds `ceil(e^2 d^2 ln((n-1)/(d-1)))` for `d >= 2`, `n > d`.
pub fn default_rounds(n: usize, d: usize) -> u64 {
    let e2 = std::f64::consts::E.powi(2);
    let ratio = (n as f64 - 1.0) / (d as f64 - 1.0);
    (e2 * (d * d) as f64 * ratio.ln()).ceil() as u64
}

pub fn default_config(g: &Graph, seed: u64) -> Result<RandomCoverConfig> {
    require_no_isolated(g)?;
    let d = complement_degree_parameter(g);
    if d == 1 {
        return Ok(RandomCoverConfig {
            p: 1.0,
            rounds: 0,
            seed,
            rounds_policy: RoundsPolicy::PaperDefault,
            single_clique: true,
        });
    }
    Ok(RandomCoverConfig {
        p: 1.0 / d as f64,
        rounds: default_rounds(g.n(), d),
        seed,
        rounds_policy: RoundsPolicy::PaperDefault,
        single_clique: false,
    })
}

/// Seed of the `trial`-th independent stream derived from `seed` (SplitMix64 finalizer).
pub fn stream_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(seed, trial))
}

#[inline]
fn unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Independent inclusion with probability `p`, in increasing vertex order.
pub fn sample_vertices(n: usize, p: f64, rng: &mut impl RngCore) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|_| unit(rng) < p))
}

/// Keeps the vertices of `s` with no non-neighbour in `s` (judged against `s` itself).
pub fn prune_to_clique(g: &Graph, s: &VertexSet) -> VertexSet {
    let keep = s.iter().filter(|&u| {
        let mut others = s.clone();
        others.remove(u);
        others.is_subset(g.neighbors(u))
    });
    VertexSet::from_vertices(g.n(), keep.collect::<Vec<_>>())
}

pub fn sample_clique(g: &Graph, p: f64, rng: &mut impl RngCore) -> VertexSet {
    prune_to_clique(g, &sample_vertices(g.n(), p, rng))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomCoverReport {
    pub d: usize,
    pub p: f64,
    pub rounds: u64,
    /// `(e^2+1) n d ceil(ln((n-1)/(d-1)))`; absent for complete graphs.
    pub bound_eq1: Option<f64>,
    pub sigma: usize,
    pub count: usize,
    /// Cliques kept from the sampling rounds.
    pub sampled_cliques: usize,
    /// Edges left uncovered by the rounds and added as 2-cliques.
    pub f_edges: usize,
    pub seed: u64,
    pub trial: u64,
}

pub fn random_cover(g: &Graph, cfg: &RandomCoverConfig) -> Result<(CliqueCover, RandomCoverReport)> {
    run_trial(g, cfg, 0)
}

fn run_trial(g: &Graph, cfg: &RandomCoverConfig, trial: u64) -> Result<(CliqueCover, RandomCoverReport)> {
    require_no_isolated(g)?;
    let n = g.n();
    let d = complement_degree_parameter(g);
    let bound_eq1 = (d >= 2).then(|| bounds::eq1_value(n, d)).transpose()?;

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut sampled = 0;
    if cfg.single_clique || d == 1 {
        if n >= 2 {
            cliques.push((0..n).collect());
            sampled = 1;
        }
    } else {
        let mut rng = rng_for(cfg.seed, trial);
        let mut covered = vec![VertexSet::new(n); n];
        for _ in 0..cfg.rounds {
            let c = sample_clique(g, cfg.p, &mut rng);
            if c.len() < 2 {
                continue;
            }
            for u in c.iter() {
                covered[u].union_with(&c);
            }
            cliques.push(c.to_vec());
            sampled += 1;
        }
        for (u, v) in g.edges() {
            if !covered[u].contains(v) {
                cliques.push(vec![u, v]);
            }
        }
    }
    let cover = CliqueCover::new(CoverMode::Cover, cliques);
    let report = RandomCoverReport {
        d,
        p: cfg.p,
        rounds: cfg.rounds,
        bound_eq1,
        sigma: cover.sigma(),
        count: cover.count(),
        sampled_cliques: sampled,
        f_edges: cover.count() - sampled,
        seed: cfg.seed,
        trial,
    };
    Ok((cover, report))
}

/// Minimum-sigma cover over `trials` independent runs (ties go to the lowest trial).
pub fn best_of(g: &Graph, cfg: &RandomCoverConfig, trials: u64) -> Result<(CliqueCover, RandomCoverReport)> {
    best_of_impl(g, cfg, trials, false)
}

/// Same result as [`best_of`], with trials spread over the rayon pool.
pub fn best_of_parallel(g: &Graph, cfg: &RandomCoverConfig, trials: u64) -> Result<(CliqueCover, RandomCoverReport)> {
    best_of_impl(g, cfg, trials, true)
}

fn best_of_impl(
    g: &Graph,
    cfg: &RandomCoverConfig,
    trials: u64,
    parallel: bool,
) -> Result<(CliqueCover, RandomCoverReport)> {
    if trials == 0 {
        return Err(Error::premise("best_of needs at least one trial"));
    }
    let key = |r: &Result<(CliqueCover, RandomCoverReport)>| match r {
        Ok((_, rep)) => (rep.sigma, rep.trial),
        Err(_) => (0, 0),
    };
    let pick = |a: Result<_>, b: Result<_>| if key(&b) < key(&a) { b } else { a };
    if parallel {
        (0..trials)
            .into_par_iter()
            .map(|i| run_trial(g, cfg, i))
            .reduce_with(pick)
            .expect("at least one trial")
    } else {
        (0..trials)
            .map(|i| run_trial(g, cfg, i))
            .reduce(pick)
            .expect("at least one trial")
    }
}
