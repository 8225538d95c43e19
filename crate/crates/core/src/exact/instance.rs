//! Bitmask view of a graph with at most 16 vertices.

use crate::graph::Graph;

pub(super) type EdgeMask = u128;
pub(super) type Perm = [u8; super::HARD_MAX_N];

pub(super) fn apply(perm: &Perm, verts: u32) -> u32 {
    let mut rest = verts;
    let mut out = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm[v];
    }
    out
}

#[derive(Clone, Copy, Debug)]
pub(super) struct Clique {
    pub verts: u32,
    pub edges: EdgeMask,
    pub size: u32,
}

pub(super) struct Instance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub edge_id: Vec<Vec<u8>>,
    pub adj: Vec<u32>,
    pub full: EdgeMask,
    /// Largest stable set of every vertex subset.
    pub alpha: Vec<u8>,
    /// Largest clique of every vertex subset.
    pub omega: Vec<u8>,
    /// `compatible[e]`: edges that can share a clique with `e` (including `e`).
    pub compatible: Vec<EdgeMask>,
    /// `star[v]`: edges incident to `v`.
    pub star: Vec<EdgeMask>,
}

impl Instance {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        assert!(n <= super::HARD_MAX_N);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut edge_id = vec![vec![u8::MAX; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            edge_id[u][v] = i as u8;
            edge_id[v][u] = i as u8;
        }
        let adj: Vec<u32> = (0..n)
            .map(|u| g.neighbors(u).iter().fold(0, |m, v| m | 1 << v))
            .collect();
        let full = if edges.len() == 128 { u128::MAX } else { (1u128 << edges.len()) - 1 };

        let mut alpha = vec![0u8; 1 << n];
        let mut omega = vec![0u8; 1 << n];
        for s in 1usize..1 << n {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let nb = adj[v] as usize;
            alpha[s] = alpha[rest].max(1 + alpha[rest & !nb]);
            omega[s] = omega[rest].max(1 + omega[rest & nb]);
        }

        let compatible = edges
            .iter()
            .map(|&(a, b)| {
                edges.iter().enumerate().fold(0u128, |mask, (j, &(c, d))| {
                    let ok = [c, d].iter().all(|&w| w == a || w == b || (adj[a] >> w & 1 == 1 && adj[b] >> w & 1 == 1));
                    if ok {
                        mask | 1 << j
                    } else {
                        mask
                    }
                })
            })
            .collect();

        let mut star = vec![0u128; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            star[u] |= 1 << i;
            star[v] |= 1 << i;
        }

        Self {
            n,
            edges,
            edge_id,
            adj,
            full,
            alpha,
            omega,
            compatible,
            star,
        }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn clique_from_verts(&self, verts: u32) -> Clique {
        let mut edges = 0u128;
        let mut rest = verts;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                edges |= 1 << self.edge_id[u][v];
            }
        }
        Clique {
            verts,
            edges,
            size: verts.count_ones(),
        }
    }

    /// Every clique with at least two vertices, in lexicographic vertex order.
    pub fn all_cliques(&self) -> Vec<Clique> {
        let mut out = Vec::new();
        for v in 0..self.n {
            let higher = self.adj[v] & !((2u32 << v) - 1);
            self.extend(1 << v, 0, higher, &mut out);
        }
        out
    }

    fn extend(&self, verts: u32, edges: EdgeMask, cand: u32, out: &mut Vec<Clique>) {
        let mut rest = cand;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut new_edges = edges;
            let mut members = verts;
            while members != 0 {
                let u = members.trailing_zeros() as usize;
                members &= members - 1;
                new_edges |= 1 << self.edge_id[u][w];
            }
            let next = verts | 1 << w;
            out.push(Clique {
                verts: next,
                edges: new_edges,
                size: next.count_ones(),
            });
            self.extend(next, new_edges, cand & self.adj[w] & !((2u32 << w) - 1), out);
        }
    }

    /// For each vertex, its neighbours across uncovered edges.
    pub fn uncovered_adjacency(&self, covered: EdgeMask, out: &mut [u32]) {
        out.iter_mut().for_each(|x| *x = 0);
        let mut rest = self.full & !covered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.edges[e];
            out[u] |= 1 << v;
            out[v] |= 1 << u;
        }
    }

    /// Lower bound on the sigma still needed: each vertex lies in at least
    /// `alpha(U)` and at least `|U| / omega(U)` further cliques, where `U` is
    /// its uncovered neighbourhood.
    pub fn sigma_lower_bound(&self, uncovered_adj: &[u32]) -> u32 {
        uncovered_adj
            .iter()
            .map(|&s| {
                if s == 0 {
                    return 0;
                }
                let a = self.alpha[s as usize] as u32;
                let w = self.omega[s as usize] as u32;
                a.max(s.count_ones().div_ceil(w))
            })
            .sum()
    }

    /// Size of a greedily chosen set of uncovered edges no two of which fit in one clique.
    pub fn count_lower_bound(&self, covered: EdgeMask) -> u32 {
        let mut rest = self.full & !covered;
        let mut count = 0;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= !self.compatible[e];
            count += 1;
        }
        count
    }

    /// Automorphisms found by backtracking, stopping after `cap` of them or
    /// `budget` search steps. Any subset is usable for symmetry pruning.
    pub fn automorphisms(&self, cap: usize, budget: u64) -> Vec<Perm> {
        let degree: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        let mut out = Vec::new();
        let mut perm = [0u8; super::HARD_MAX_N];
        let mut steps = 0u64;
        self.extend_automorphism(0, 0, &degree, &mut perm, &mut out, cap, budget, &mut steps);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_automorphism(
        &self,
        v: usize,
        taken: u32,
        degree: &[u32],
        perm: &mut Perm,
        out: &mut Vec<Perm>,
        cap: usize,
        budget: u64,
        steps: &mut u64,
    ) {
        if v == self.n {
            out.push(*perm);
            return;
        }
        for w in 0..self.n {
            if out.len() >= cap || *steps >= budget {
                return;
            }
            *steps += 1;
            if taken >> w & 1 == 1 || degree[w] != degree[v] {
                continue;
            }
            let consistent = (0..v).all(|u| (self.adj[u] >> v & 1) == (self.adj[perm[u] as usize] >> w & 1));
            if consistent {
                perm[v] = w as u8;
                self.extend_automorphism(v + 1, taken | 1 << w, degree, perm, out, cap, budget, steps);
            }
        }
    }

    pub fn verts_to_vec(verts: u32) -> Vec<usize> {
        (0..32).filter(|&v| verts >> v & 1 == 1).collect()
    }
}
