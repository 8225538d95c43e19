//! Undirected simple graphs on dense vertex ids, plus the clique and
//! stable-set primitives every other module builds on.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency rows are symmetric bitsets without self-loops. Labels are
/// optional and only used for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds `uv`; panics on out-of-range ids or loops. For generators.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("generator produced an invalid edge");
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n()).any(|u| self.adj[u].is_empty())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `u`: its label if present, otherwise the id.
    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(l) => l[u].clone(),
            None => u.to_string(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for u in 0..n {
            let mut row = VertexSet::full(n);
            row.difference_with(&self.adj[u]);
            row.remove(u);
            adj.push(row);
        }
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let ids = keep.to_vec();
        let mut g = Graph::empty(ids.len());
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(ids.iter().map(|&u| labels[u].clone()).collect());
        }
        g
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| {
            let mut rest = s.clone();
            rest.remove(u);
            rest.is_subset(&self.adj[u])
        })
    }

    /// Same as [`Graph::is_clique`] for a vertex list; ids must be in range.
    pub fn is_clique_slice(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].is_disjoint(s))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|u| self.adj[u].intersection_len(s)).sum::<usize>() / 2
    }

    /// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
    ///
    /// Bron–Kerbosch with Tomita pivoting; the outer loop follows a
    /// degeneracy ordering. An edgeless graph yields its singletons.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut out = Vec::new();
        let order = self.degeneracy_order();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for &v in &order {
            let mut later = VertexSet::new(n);
            let mut earlier = VertexSet::new(n);
            for w in self.adj[v].iter() {
                if position[w] > position[v] {
                    later.insert(w);
                } else {
                    earlier.insert(w);
                }
            }
            let r = VertexSet::from_vertices(n, [v]);
            self.bron_kerbosch(r, later, earlier, &mut out);
        }
        out.sort_by_key(|c| c.to_vec());
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (self.adj[u].intersection_len(&p), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let branch = p.difference(&self.adj[pivot]);
        for v in branch.iter() {
            let mut r2 = r.clone();
            r2.insert(v);
            self.bron_kerbosch(r2, p.intersection(&self.adj[v]), x.intersection(&self.adj[v]), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Repeatedly removes a minimum-degree vertex (lowest id on ties).
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&u| !removed[u])
                .min_by_key(|&u| (deg[u], u))
                .expect("vertices remain");
            removed[v] = true;
            order.push(v);
            for w in self.adj[v].iter() {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        order
    }

    /// Size of a largest clique; 0 only for the graph on no vertices.
    pub fn clique_number(&self) -> usize {
        self.maximal_cliques().iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Size of a maximum stable set of the subgraph induced by `within`.
    pub fn max_stable_set_size(&self, within: &VertexSet) -> usize {
        let mut best = 0;
        self.stable_search(within.clone(), 0, &mut best);
        best
    }

    // Branch and bound for a maximum clique of the complement restricted to `cand`.
    fn stable_search(&self, mut cand: VertexSet, size: usize, best: &mut usize) {
        loop {
            if size + cand.len() <= *best {
                return;
            }
            // A vertex with no neighbors among the candidates belongs to some maximum stable set.
            if let Some(free) = cand.iter().find(|&u| self.adj[u].is_disjoint(&cand)) {
                cand.remove(free);
                return self.stable_search(cand, size + 1, best);
            }
            let Some(v) = cand.iter().max_by_key(|&u| (self.adj[u].intersection_len(&cand), std::cmp::Reverse(u))) else {
                *best = (*best).max(size);
                return;
            };
            let mut take = cand.clone();
            take.remove(v);
            take.difference_with(&self.adj[v]);
            self.stable_search(take, size + 1, best);
            cand.remove(v);
        }
    }

    pub fn max_stable_set_in_neighborhood(&self, u: usize) -> usize {
        self.max_stable_set_size(&self.adj[u])
    }
}
