//! Clique coverings and partitions: verification, valencies and sigma.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverMode {
    Cover,
    Partition,
}

impl CoverMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverMode::Cover => "cover",
            CoverMode::Partition => "partition",
        }
    }
}

impl std::str::FromStr for CoverMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cover" => Ok(CoverMode::Cover),
            "partition" => Ok(CoverMode::Partition),
            other => Err(format!("unknown cover mode `{other}`")),
        }
    }
}

/// An ordered family of cliques, each stored as a sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    cliques: Vec<Vec<usize>>,
    mode: CoverMode,
    allow_singletons: bool,
}

impl CliqueCover {
    pub fn new(mode: CoverMode, cliques: Vec<Vec<usize>>) -> Self {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Self {
            cliques,
            mode,
            allow_singletons: false,
        }
    }

    /// Permits cliques of size 1, e.g. after restricting a cover to an induced subgraph.
    pub fn allowing_singletons(mut self, allow: bool) -> Self {
        self.allow_singletons = allow;
        self
    }

    pub fn with_mode(mut self, mode: CoverMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Vec<usize>> {
        self.cliques
    }

    pub fn mode(&self) -> CoverMode {
        self.mode
    }

    pub fn allows_singletons(&self) -> bool {
        self.allow_singletons
    }

    pub fn count(&self) -> usize {
        self.cliques.len()
    }

    /// Sum of clique sizes.
    pub fn sigma(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.cliques.iter().flatten().copied().max()
    }

    /// Number of cliques containing each vertex of `0..n`.
    pub fn valencies(&self, n: usize) -> Vec<usize> {
        let mut val = vec![0; n];
        for &u in self.cliques.iter().flatten() {
            val[u] += 1;
        }
        val
    }
}

/// First reason a family fails to be a clique covering/partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Clique `clique` misses the edge `(u, v)`.
    NotAClique { clique: usize, u: usize, v: usize },
    /// Clique `clique` has fewer than two vertices.
    TooSmall { clique: usize, size: usize },
    Uncovered { u: usize, v: usize },
    /// Partition mode: the edge lies in two listed cliques.
    CoveredTwice { u: usize, v: usize, first: usize, second: usize },
    /// Partition mode: the same clique is listed twice.
    Duplicate { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotAClique { clique, u, v } => {
                write!(f, "clique #{clique} is not a clique: {u} and {v} are not adjacent")
            }
            Violation::TooSmall { clique, size } => {
                write!(f, "clique #{clique} has {size} vertices; singletons are not permitted")
            }
            Violation::Uncovered { u, v } => write!(f, "edge {u}-{v} is not covered"),
            Violation::CoveredTwice { u, v, first, second } => {
                write!(f, "edge {u}-{v} lies in cliques #{first} and #{second}")
            }
            Violation::Duplicate { first, second } => {
                write!(f, "cliques #{first} and #{second} are identical")
            }
        }
    }
}

/// Outcome of [`verify`]. `violation` is `None` exactly when the cover is valid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub verified: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn ok() -> Self {
        Self {
            verified: true,
            violation: None,
        }
    }

    fn fail(v: Violation) -> Self {
        Self {
            verified: false,
            violation: Some(v),
        }
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::Unverified(v)),
        }
    }
}

/// Checks that `c` is a clique covering (or partition) of `g`.
///
/// Out-of-range ids are an input error rather than a failed verdict.
/// Checks run in order: each clique (by index), coverage, then partition
/// exclusivity; edge diagnostics name the lexicographically smallest edge.
pub fn verify(g: &Graph, c: &CliqueCover) -> Result<Verdict> {
    let n = g.n();
    if let Some(v) = c.max_vertex().filter(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    for (i, clique) in c.cliques.iter().enumerate() {
        if clique.len() < 2 && !(c.allow_singletons && clique.len() == 1) {
            return Ok(Verdict::fail(Violation::TooSmall {
                clique: i,
                size: clique.len(),
            }));
        }
        for (a, &u) in clique.iter().enumerate() {
            if let Some(&v) = clique[a + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Ok(Verdict::fail(Violation::NotAClique { clique: i, u, v }));
            }
        }
    }

    // owner[u][v] = first clique containing uv
    let mut owner = vec![vec![usize::MAX; n]; n];
    let mut twice: Option<(usize, usize, usize, usize)> = None;
    for (i, clique) in c.cliques.iter().enumerate() {
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                let slot = &mut owner[u][v];
                if *slot == usize::MAX {
                    *slot = i;
                } else if twice.is_none_or(|(tu, tv, _, _)| (u, v) < (tu, tv)) {
                    twice = Some((u, v, *slot, i));
                }
            }
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| owner[u][v] == usize::MAX) {
        return Ok(Verdict::fail(Violation::Uncovered { u, v }));
    }
    if c.mode == CoverMode::Partition {
        if let Some((u, v, first, second)) = twice {
            return Ok(Verdict::fail(Violation::CoveredTwice { u, v, first, second }));
        }
        if g.m() >= 1 {
            for i in 0..c.cliques.len() {
                if let Some(j) = (i + 1..c.cliques.len()).find(|&j| c.cliques[j] == c.cliques[i]) {
                    return Ok(Verdict::fail(Violation::Duplicate { first: i, second: j }));
                }
            }
        }
    }
    Ok(Verdict::ok())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverStats {
    pub sigma: usize,
    pub count: usize,
    pub valencies: Vec<usize>,
    pub max_valency: usize,
    pub min_valency: usize,
}

/// Sigma, clique count and valencies of a verified cover; refuses unverified ones.
pub fn stats(g: &Graph, c: &CliqueCover) -> Result<CoverStats> {
    verify(g, c)?.into_result()?;
    let valencies = c.valencies(g.n());
    let sigma = c.sigma();
    debug_assert_eq!(sigma, valencies.iter().sum::<usize>());
    Ok(CoverStats {
        sigma,
        count: c.count(),
        max_valency: valencies.iter().copied().max().unwrap_or(0),
        min_valency: valencies.iter().copied().min().unwrap_or(0),
        valencies,
    })
}

/// The partition of `g` into its edges.
pub fn edges_to_cover(g: &Graph) -> CliqueCover {
    CliqueCover::new(CoverMode::Partition, g.edges().map(|(u, v)| vec![u, v]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValencySummary {
    pub min: usize,
    pub max: usize,
    pub list: Vec<usize>,
}

/// JSON-facing summary of a cover against a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub mode: CoverMode,
    pub count: usize,
    pub sigma: usize,
    pub valency: ValencySummary,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

pub fn report(g: &Graph, c: &CliqueCover) -> Result<CoverReport> {
    let verdict = verify(g, c)?;
    let list = c.valencies(g.n());
    Ok(CoverReport {
        mode: c.mode(),
        count: c.count(),
        sigma: c.sigma(),
        valency: ValencySummary {
            min: list.iter().copied().min().unwrap_or(0),
            max: list.iter().copied().max().unwrap_or(0),
            list,
        },
        verified: verdict.verified,
        violation: verdict.violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gn, canonical_covers_gn, complete_graph, cycle_graph};
    use proptest::prelude::*;

    #[test]
    fn triangle_partition() {
        let k3 = complete_graph(3);
        let c = CliqueCover::new(CoverMode::Partition, vec![vec![0, 1, 2]]);
        assert!(verify(&k3, &c).unwrap().verified);
        let s = stats(&k3, &c).unwrap();
        assert_eq!((s.sigma, s.count), (3, 1));
        assert_eq!(s.valencies, vec![1, 1, 1]);
    }

    #[test]
    fn reports_smallest_uncovered_edge() {
        let c4 = cycle_graph(4);
        let c = CliqueCover::new(CoverMode::Cover, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let v = verify(&c4, &c).unwrap();
        assert_eq!(v.violation, Some(Violation::Uncovered { u: 0, v: 3 }));
        assert!(matches!(stats(&c4, &c), Err(Error::Unverified(_))));
    }

    #[test]
    fn out_of_range_is_input_error() {
        let c = CliqueCover::new(CoverMode::Cover, vec![vec![0, 7]]);
        assert!(matches!(
            verify(&complete_graph(3), &c),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn rejects_non_cliques_and_singletons() {
        let c4 = cycle_graph(4);
        let bad = CliqueCover::new(CoverMode::Cover, vec![vec![0, 1, 2]]);
        assert_eq!(
            verify(&c4, &bad).unwrap().violation,
            Some(Violation::NotAClique { clique: 0, u: 0, v: 2 })
        );
        let mut cl: Vec<Vec<usize>> = c4.edges().map(|(u, v)| vec![u, v]).collect();
        cl.push(vec![2]);
        let single = CliqueCover::new(CoverMode::Cover, cl);
        assert!(!verify(&c4, &single).unwrap().verified);
        assert!(verify(&c4, &single.clone().allowing_singletons(true)).unwrap().verified);
    }

    #[test]
    fn partition_mode_rejects_overlap_and_duplicates() {
        let k3 = complete_graph(3);
        let overlap = CliqueCover::new(CoverMode::Partition, vec![vec![0, 1, 2], vec![1, 2]]);
        assert_eq!(
            verify(&k3, &overlap).unwrap().violation,
            Some(Violation::CoveredTwice { u: 1, v: 2, first: 0, second: 1 })
        );
        assert!(verify(&k3, &overlap.clone().with_mode(CoverMode::Cover)).unwrap().verified);
        let dup = CliqueCover::new(CoverMode::Partition, vec![vec![0, 1, 2], vec![0], vec![0]])
            .allowing_singletons(true);
        assert_eq!(
            verify(&k3, &dup).unwrap().violation,
            Some(Violation::Duplicate { first: 1, second: 2 })
        );
    }

    #[test]
    fn gn_canonical_cover_sigma() {
        for n in 1..=6 {
            let g = build_gn(n).unwrap();
            let (first, second) = canonical_covers_gn(n).unwrap();
            assert_eq!(stats(&g, &first).unwrap().sigma, n * n + 4 * n + 2);
            assert_eq!(stats(&g, &second).unwrap().sigma, 8 * n + 2);
        }
    }

    #[test]
    fn edge_partitions() {
        assert_eq!(edges_to_cover(&cycle_graph(4)).count(), 4);
        assert_eq!(edges_to_cover(&cycle_graph(4)).sigma(), 8);
        assert_eq!(edges_to_cover(&complete_graph(4)).sigma(), 12);
        let g2 = build_gn(2).unwrap();
        assert_eq!(g2.m(), 17);
        let c = edges_to_cover(&g2);
        assert_eq!(c.sigma(), 34);
        assert!(verify(&g2, &c).unwrap().verified);
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    proptest! {
        // Random covers built from maximal cliques plus leftover singletons.
        #[test]
        fn double_counting_and_sigma_lower_bound(
            n in 2usize..=8,
            bits in prop::collection::vec(any::<bool>(), 28),
            picks in prop::collection::vec(any::<bool>(), 40),
        ) {
            let g = graph_from_bits(n, &bits);
            let mut cliques: Vec<Vec<usize>> = g.maximal_cliques().iter().map(|c| c.to_vec()).collect();
            for (c, &keep) in cliques.iter_mut().zip(&picks) {
                if !keep && c.len() > 2 {
                    c.pop();
                }
            }
            let cover = CliqueCover::new(CoverMode::Cover, cliques).allowing_singletons(true);
            let val = cover.valencies(n);
            prop_assert_eq!(cover.sigma(), val.iter().sum::<usize>());

            let mut covered = std::collections::BTreeSet::new();
            for c in cover.cliques() {
                for (a, &u) in c.iter().enumerate() {
                    for &v in &c[a + 1..] {
                        covered.insert((u, v));
                    }
                }
            }
            let omega = g.clique_number();
            if omega >= 2 {
                prop_assert!(cover.sigma() * (omega - 1) >= 2 * covered.len());
            }
        }

        #[test]
        fn partitions_count_every_edge_once(n in 1usize..=8, bits in prop::collection::vec(any::<bool>(), 28)) {
            let g = graph_from_bits(n, &bits);
            let c = edges_to_cover(&g);
            prop_assert!(verify(&g, &c).unwrap().verified);
            let pairs: usize = c.cliques().iter().map(|k| k.len() * (k.len() - 1) / 2).sum();
            prop_assert_eq!(pairs, g.m());
        }
    }
}
