//! Depth-first branch and bound on the lowest-indexed uncovered edge.
//!
//! - Count objectives (cc, cp) order candidates by decreasing size and prune
//!   with a greedy set of pairwise clique-incompatible uncovered edges.
//! - Sigma objectives (scc, scp, scc') order candidates by increasing
//!   size per newly covered edge and prune with the per-vertex valency bound.
//! - Sigma objectives in cover mode keep every partial cover irredundant: a
//!   chosen clique with a vertex whose edges inside it are all covered twice
//!   could shrink, so no optimal cover extends that state.
//! - Sigma objectives branch on one candidate per orbit under the known
//!   automorphisms that fix every chosen clique; equivalent candidates lead
//!   to isomorphic subtrees.
//! - A transposition table keyed by the covered-edge set (and, for scc', the
//!   clique count) drops states already reached at no greater cost.

use std::collections::HashMap;

use super::instance::{apply, Clique, EdgeMask, Instance, Perm};
use super::Objective;
use crate::covers::{CliqueCover, CoverMode};
use crate::graph::Graph;

const TABLE_LIMIT: usize = 1 << 21;
const AUTOMORPHISM_CAP: usize = 1 << 16;
const AUTOMORPHISM_BUDGET: u64 = 1 << 22;
/// Orbits at a node are computed under at most this many permutation applications.
const ORBIT_WORK_LIMIT: usize = 1 << 23;

pub(super) fn solve(g: &Graph, objective: Objective) -> (usize, CliqueCover, u64) {
    let mode = if objective.is_partition() {
        CoverMode::Partition
    } else {
        CoverMode::Cover
    };
    if g.m() == 0 {
        return (0, CliqueCover::new(mode, Vec::new()), 0);
    }
    let inst = Instance::new(g);
    match objective {
        Objective::Cc | Objective::Cp => {
            let pool = if objective == Objective::Cc {
                cc_pool(g, &inst)
            } else {
                inst.all_cliques()
            };
            let mut s = CountSearch::new(&inst, pool, objective == Objective::Cp);
            s.run();
            let cover = s.witness(mode);
            (s.best as usize, cover, s.nodes)
        }
        Objective::Scc | Objective::Scp => {
            let mut s = SigmaSearch::new(&inst, objective == Objective::Scp, None);
            s.run();
            let cover = s.witness(mode);
            (s.best as usize, cover, s.nodes)
        }
        Objective::SccPrime => {
            let mut counter = CountSearch::new(&inst, cc_pool(g, &inst), false);
            counter.run();
            let mut s = SigmaSearch::new(&inst, false, Some(counter.best));
            // The minimum-count witness is a feasible starting incumbent.
            s.best = counter.best_stack.iter().map(|&i| counter.pool[i].size).sum();
            s.best_stack = counter.best_stack.iter().map(|&i| counter.pool[i]).collect();
            s.run();
            let cover = s.witness(mode);
            (s.best as usize, cover, counter.nodes + s.nodes)
        }
    }
}

fn cc_pool(g: &Graph, inst: &Instance) -> Vec<Clique> {
    g.maximal_cliques()
        .iter()
        .filter(|c| c.len() >= 2)
        .map(|c| inst.clique_from_verts(c.iter().fold(0, |m, v| m | 1 << v)))
        .collect()
}

fn index_by_edge(inst: &Instance, pool: &[Clique]) -> Vec<Vec<usize>> {
    let mut by_edge = vec![Vec::new(); inst.m()];
    for (i, c) in pool.iter().enumerate() {
        let mut rest = c.edges;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            by_edge[e].push(i);
        }
    }
    by_edge
}

fn to_cover(cliques: impl Iterator<Item = Clique>, mode: CoverMode) -> CliqueCover {
    CliqueCover::new(mode, cliques.map(|c| Instance::verts_to_vec(c.verts)).collect())
}

struct CountSearch<'a> {
    inst: &'a Instance,
    pool: Vec<Clique>,
    by_edge: Vec<Vec<usize>>,
    partition: bool,
    best: u32,
    best_stack: Vec<usize>,
    stack: Vec<usize>,
    seen: HashMap<EdgeMask, u32>,
    nodes: u64,
}

impl<'a> CountSearch<'a> {
    fn new(inst: &'a Instance, pool: Vec<Clique>, partition: bool) -> Self {
        let mut by_edge = index_by_edge(inst, &pool);
        for list in &mut by_edge {
            list.sort_by_key(|&i| (std::cmp::Reverse(pool[i].size), i));
        }
        Self {
            inst,
            pool,
            by_edge,
            partition,
            best: u32::MAX,
            best_stack: Vec::new(),
            stack: Vec::new(),
            seen: HashMap::new(),
            nodes: 0,
        }
    }

    fn run(&mut self) {
        self.dfs(0, 0);
        debug_assert!(self.best < u32::MAX, "the edge cliques always form a partition");
    }

    fn dfs(&mut self, covered: EdgeMask, used: u32) {
        self.nodes += 1;
        if covered == self.inst.full {
            if used < self.best {
                self.best = used;
                self.best_stack.clone_from(&self.stack);
            }
            return;
        }
        if used + self.inst.count_lower_bound(covered) >= self.best {
            return;
        }
        if !remember(&mut self.seen, covered, used) {
            return;
        }
        let e = (self.inst.full & !covered).trailing_zeros() as usize;
        for k in 0..self.by_edge[e].len() {
            let i = self.by_edge[e][k];
            let c = self.pool[i];
            if self.partition && c.edges & covered != 0 {
                continue;
            }
            self.stack.push(i);
            self.dfs(covered | c.edges, used + 1);
            self.stack.pop();
        }
    }

    fn witness(&self, mode: CoverMode) -> CliqueCover {
        to_cover(self.best_stack.iter().map(|&i| self.pool[i]), mode)
    }
}

/// Records `cost` for `key`; returns false when the key was already reached at no greater cost.
fn remember<K: std::hash::Hash + Eq>(seen: &mut HashMap<K, u32>, key: K, cost: u32) -> bool {
    match seen.get_mut(&key) {
        Some(prev) if *prev <= cost => false,
        Some(prev) => {
            *prev = cost;
            true
        }
        None => {
            if seen.len() < TABLE_LIMIT {
                seen.insert(key, cost);
            }
            true
        }
    }
}

struct SigmaSearch<'a> {
    inst: &'a Instance,
    pool: Vec<Clique>,
    by_edge: Vec<Vec<usize>>,
    partition: bool,
    /// For scc': exact number of cliques allowed.
    count_limit: Option<u32>,
    best: u32,
    best_stack: Vec<Clique>,
    stack: Vec<Clique>,
    seen: HashMap<(EdgeMask, u32), u32>,
    nodes: u64,
    scratch: Vec<Vec<u32>>,
    /// `symmetry[k]`: automorphisms fixing each of the first `k` chosen cliques.
    symmetry: Vec<Vec<Perm>>,
}

impl<'a> SigmaSearch<'a> {
    fn new(inst: &'a Instance, partition: bool, count_limit: Option<u32>) -> Self {
        let pool = inst.all_cliques();
        let by_edge = index_by_edge(inst, &pool);
        let trivial = edges_to_cover_cliques(inst);
        Self {
            inst,
            pool,
            by_edge,
            partition,
            count_limit,
            best: 2 * inst.m() as u32,
            best_stack: trivial,
            stack: Vec::new(),
            seen: HashMap::new(),
            nodes: 0,
            scratch: Vec::new(),
            symmetry: vec![inst.automorphisms(AUTOMORPHISM_CAP, AUTOMORPHISM_BUDGET)],
        }
    }

    fn run(&mut self) {
        // The all-edges incumbent is only admissible when no count limit applies
        // or it already meets the limit; otherwise start from "no solution".
        if let Some(limit) = self.count_limit {
            if self.best_stack.len() as u32 > limit {
                self.best = u32::MAX;
                self.best_stack.clear();
            }
        }
        self.dfs(0, 0, 0, 0);
    }

    fn dfs(&mut self, covered: EdgeMask, twice: EdgeMask, spent: u32, used: u32) {
        self.nodes += 1;
        if covered == self.inst.full {
            if spent < self.best {
                self.best = spent;
                self.best_stack.clone_from(&self.stack);
            }
            return;
        }
        if let Some(limit) = self.count_limit {
            if used + self.inst.count_lower_bound(covered) > limit {
                return;
            }
        }
        let key_count = if self.count_limit.is_some() { used } else { 0 };
        if !remember(&mut self.seen, (covered, key_count), spent) {
            return;
        }
        let depth = self.stack.len();
        if self.scratch.len() <= depth {
            self.scratch.push(vec![0; self.inst.n]);
        }
        let mut open = std::mem::take(&mut self.scratch[depth]);
        self.inst.uncovered_adjacency(covered, &mut open);
        if spent.saturating_add(self.inst.sigma_lower_bound(&open)) >= self.best {
            self.scratch[depth] = open;
            return;
        }

        let e = (self.inst.full & !covered).trailing_zeros() as usize;
        let (a, b) = self.inst.edges[e];
        let ends = (1u32 << a) | (1u32 << b);
        let mut candidates: Vec<(Clique, u32)> = Vec::new();
        for &i in &self.by_edge[e] {
            let c = self.pool[i];
            if self.partition {
                if c.edges & covered != 0 {
                    continue;
                }
            } else if !self.undominated(c, ends, &open) {
                continue;
            }
            let fresh = (c.edges & !covered).count_ones();
            candidates.push((c, fresh));
        }
        self.scratch[depth] = open;
        self.prune_symmetric(&mut candidates);
        // size / fresh ascending, then more fresh edges, then pool order (stable sort)
        candidates.sort_by(|&(c1, f1), &(c2, f2)| {
            (c1.size * f2)
                .cmp(&(c2.size * f1))
                .then(f2.cmp(&f1))
        });
        for (c, _) in candidates {
            if spent + c.size >= self.best {
                continue;
            }
            let doubled = covered & c.edges;
            let twice = twice | doubled;
            if doubled != 0 && self.redundant(c, twice) {
                continue;
            }
            self.stack.push(c);
            self.dfs(covered | c.edges, twice, spent + c.size, used + 1);
            self.stack.pop();
        }
    }

    /// Keeps one candidate per orbit of the automorphisms fixing every chosen
    /// clique, after refreshing that stabiliser for the current depth.
    fn prune_symmetric(&mut self, candidates: &mut Vec<(Clique, u32)>) {
        let depth = self.stack.len();
        if depth > 0 {
            if self.symmetry.len() <= depth {
                self.symmetry.resize(depth + 1, Vec::new());
            }
            let last = self.stack[depth - 1].verts;
            let (head, tail) = self.symmetry.split_at_mut(depth);
            let parent = &head[depth - 1];
            tail[0].clear();
            if parent.len() > 1 {
                tail[0].extend(parent.iter().filter(|p| apply(p, last) == last));
            }
        }
        let group = &self.symmetry[depth];
        if group.len() <= 1 || candidates.is_empty() {
            return;
        }
        let usable = &group[..group.len().min(ORBIT_WORK_LIMIT / candidates.len())];
        if usable.len() <= 1 {
            return;
        }
        let mut reps = std::collections::HashSet::new();
        candidates.retain(|&(c, _)| {
            let rep = usable.iter().map(|p| apply(p, c.verts)).min().unwrap_or(c.verts);
            reps.insert(rep)
        });
    }

    /// Whether some vertex of a chosen clique, or of `next`, has all its
    /// edges inside that clique in `twice`.
    fn redundant(&self, next: Clique, twice: EdgeMask) -> bool {
        self.stack.iter().chain(std::iter::once(&next)).any(|c| {
            if c.edges & twice == 0 {
                return false;
            }
            let mut rest = c.verts;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.inst.star[v] & c.edges & !twice == 0 {
                    return true;
                }
            }
            false
        })
    }

    /// A covering clique is dominated when one of its vertices (other than the
    /// branching edge's ends) has no uncovered edge inside it: dropping that
    /// vertex covers the same new edges more cheaply.
    fn undominated(&self, c: Clique, ends: u32, open: &[u32]) -> bool {
        let mut rest = c.verts & !ends;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if open[w] & c.verts == 0 {
                return false;
            }
        }
        true
    }

    fn witness(&self, mode: CoverMode) -> CliqueCover {
        to_cover(self.best_stack.iter().copied(), mode)
    }
}

fn edges_to_cover_cliques(inst: &Instance) -> Vec<Clique> {
    inst.edges
        .iter()
        .map(|&(u, v)| inst.clique_from_verts((1 << u) | (1 << v)))
        .collect()
}
