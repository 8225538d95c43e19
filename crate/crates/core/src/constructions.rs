//! Graph families and explicit optimal coverings.
//!
//! Besides a few elementary families, this module builds the graph `G_n`
//! whose minimum-count covering is far from sigma-optimal, complete
//! multipartite graphs `K_t(d)`, the orthogonal array OA(d, d+1) over GF(d),
//! and the clique partitions of multipartite graphs obtained from it.
//!
//! Vertex layouts:
//! - `G_n`: `x_0 = 0`, `y_0 = 1`, `x_i = 1 + i`, `y_i = n + 1 + i`, `z_i = 2n + 1 + i` for `i` in `1..=n`.
//! - multipartite: parts are contiguous; vertex `j` of part `i` is `offset(i) + j`.
//!   For `K_t(2)` this gives `x_i = 2i`, `y_i = 2i + 1` (0-based `i`).

use crate::covers::{CliqueCover, CoverMode};
use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::graph::Graph;

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 1..n {
        g.add_edge(u - 1, u);
    }
    g
}

/// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut g = path_graph(n);
    g.add_edge(0, n - 1);
    g
}

/// `k` disjoint edges `{2i, 2i+1}`.
pub fn perfect_matching(k: usize) -> Graph {
    let mut g = Graph::empty(2 * k);
    for i in 0..k {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Largest order accepted by [`connected_catalog`].
pub const CATALOG_MAX_N: usize = 7;

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, in increasing order of the smallest labelled edge code.
pub fn connected_catalog(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_MAX_N {
        return Err(Error::TooLarge { n, cap: CATALOG_MAX_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = vec![false; 1 << pairs.len()];
    let mut out = Vec::new();
    for code in 0..seen.len() {
        if seen[code] {
            continue;
        }
        for p in &perms {
            let image = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .fold(0usize, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]]);
            seen[image] = true;
        }
        let edges = pairs.iter().enumerate().filter(|&(i, _)| code >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges)?;
        if is_connected(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut reached = vec![false; g.n()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u).iter() {
            if !reached[v] {
                reached[v] = true;
                stack.push(v);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

pub fn build_gn(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::premise("G_n needs n >= 1"));
    }
    let x = |i: usize| if i == 0 { 0 } else { 1 + i };
    let y = |i: usize| if i == 0 { 1 } else { n + 1 + i };
    let z = |i: usize| 2 * n + 1 + i;
    let mut g = Graph::empty(3 * n + 2);
    for i in 0..=n {
        for j in i + 1..=n {
            g.add_edge(x(i), x(j));
            g.add_edge(y(i), y(j));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(z(i), z(j));
        }
        for j in 1..=n {
            g.add_edge(z(i), x(j));
            g.add_edge(z(i), y(j));
        }
        g.add_edge(x(i), y(i));
    }
    let mut labels = vec![String::new(); 3 * n + 2];
    for i in 0..=n {
        labels[x(i)] = format!("x{i}");
        labels[y(i)] = format!("y{i}");
    }
    for i in 1..=n {
        labels[z(i)] = format!("z{i}");
    }
    Ok(g.with_labels(labels))
}

/// The two canonical coverings of `G_n`: the unique `(n+2)`-clique covering,
/// and the `(n+4)`-clique covering of smaller sigma for large `n`.
pub fn canonical_covers_gn(n: usize) -> Result<(CliqueCover, CliqueCover)> {
    if n < 1 {
        return Err(Error::premise("G_n needs n >= 1"));
    }
    let xs: Vec<usize> = (1..=n).map(|i| 1 + i).collect();
    let ys: Vec<usize> = (1..=n).map(|i| n + 1 + i).collect();
    let zs: Vec<usize> = (1..=n).map(|i| 2 * n + 1 + i).collect();
    let with = |head: &[usize], tail: &[usize]| -> Vec<usize> { head.iter().chain(tail).copied().collect() };

    let mut first: Vec<Vec<usize>> = (0..n).map(|i| with(&[xs[i], ys[i]], &zs)).collect();
    first.push(with(&[1], &ys));
    first.push(with(&[0], &xs));

    let mut second = vec![with(&[0], &xs), with(&[1], &ys), with(&xs, &zs), with(&ys, &zs)];
    second.extend((0..n).map(|i| vec![xs[i], ys[i]]));

    Ok((
        CliqueCover::new(CoverMode::Cover, first),
        CliqueCover::new(CoverMode::Cover, second),
    ))
}

/// Part sizes of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteSpec {
    part_sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.is_empty() || part_sizes.contains(&0) {
            return Err(Error::premise("multipartite graphs need at least one part and no empty parts"));
        }
        Ok(Self { part_sizes })
    }

    /// `t` parts of size `d`.
    pub fn uniform(t: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; t])
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn n(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Largest part size.
    pub fn d(&self) -> usize {
        self.part_sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn parts(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn offset(&self, part: usize) -> usize {
        self.part_sizes[..part].iter().sum()
    }

    pub fn vertex(&self, part: usize, index: usize) -> usize {
        debug_assert!(index < self.part_sizes[part]);
        self.offset(part) + index
    }

    /// Checks the premises under which the orthogonal-array partition is optimal:
    /// `d` a prime power, at least two parts of size `d`, `2d <= n <= d(d+1)`,
    /// and at most `d + 1` parts (so the graph embeds in `K_{d+1}(d)`).
    pub fn check_partition_premises(&self) -> Result<()> {
        let d = self.d();
        let n = self.n();
        let full = self.part_sizes.iter().filter(|&&s| s == d).count();
        if crate::field::prime_power(d).is_none() {
            GaloisField::new(d)?;
        }
        if full < 2 {
            return Err(Error::premise(format!(
                "need at least two parts of the maximum size d = {d}; found {full}"
            )));
        }
        if n < 2 * d {
            return Err(Error::premise(format!("need n >= 2d; n = {n}, d = {d}")));
        }
        if n > d * (d + 1) {
            return Err(Error::premise(format!("need n <= d(d+1) = {}; n = {n}", d * (d + 1))));
        }
        if self.parts() > d + 1 {
            return Err(Error::premise(format!(
                "{} parts do not embed in K_{}({d}), which has d + 1 = {} parts",
                self.parts(),
                d + 1,
                d + 1
            )));
        }
        Ok(())
    }
}

pub fn build_multipartite(spec: &MultipartiteSpec) -> Graph {
    let n = spec.n();
    let mut part_of = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (i, &s) in spec.part_sizes.iter().enumerate() {
        for j in 0..s {
            part_of.push(i);
            labels.push(format!("v{}_{}", i + 1, j + 1));
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g.with_labels(labels)
}

/// `K_t(d)`: `t` parts of size `d`.
pub fn complete_multipartite(t: usize, d: usize) -> Graph {
    build_multipartite(&MultipartiteSpec::uniform(t, d).expect("t, d >= 1"))
}

/// The cocktail party graph `K_t(2)`, i.e. `K_2t` minus a perfect matching,
/// labelled `x_i`, `y_i` (1-based).
pub fn cocktail_party(t: usize) -> Graph {
    let g = if t == 0 { Graph::empty(0) } else { complete_multipartite(t, 2) };
    let labels = (1..=t).flat_map(|i| [format!("x{i}"), format!("y{i}")]).collect();
    g.with_labels(labels)
}

/// An `n^2 x k` array over `0..n` (reported 1-based) in which every pair of
/// columns contains every ordered symbol pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalArray {
    n: usize,
    k: usize,
    rows: Vec<Vec<usize>>,
}

/// First pair of columns and symbol pair breaking the orthogonality property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OaDefect {
    pub columns: (usize, usize),
    pub symbols: (usize, usize),
    pub occurrences: usize,
}

impl OrthogonalArray {
    pub fn from_rows(n: usize, k: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != n * n || rows.iter().any(|r| r.len() != k || r.iter().any(|&s| s >= n)) {
            return Err(Error::premise(format!("an OA({n},{k}) needs {} rows of {k} symbols below {n}", n * n)));
        }
        Ok(Self { n, k, rows })
    }

    pub fn symbols(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> usize {
        self.k
    }

    /// Rows with 0-based symbols.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Exhaustive check over all ordered column pairs.
    pub fn check(&self) -> std::result::Result<(), OaDefect> {
        let n = self.n;
        for c1 in 0..self.k {
            for c2 in 0..self.k {
                if c1 == c2 {
                    continue;
                }
                let mut seen = vec![0usize; n * n];
                for row in &self.rows {
                    seen[row[c1] * n + row[c2]] += 1;
                }
                if let Some(idx) = seen.iter().position(|&c| c != 1) {
                    return Err(OaDefect {
                        columns: (c1, c2),
                        symbols: (idx / n, idx % n),
                        occurrences: seen[idx],
                    });
                }
            }
        }
        Ok(())
    }

    /// CSV with 1-based symbols, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|s| (s + 1).to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// OA(d, d+1) from the affine plane over GF(d): row `(a, b)` holds
/// `a + c*b` in the column of each slope `c`, and `b` in the last column.
pub fn build_oa(d: usize) -> Result<OrthogonalArray> {
    if d < 2 {
        return Err(Error::premise("OA(d, d+1) needs d >= 2"));
    }
    let f = GaloisField::new(d)?;
    let mut rows = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let mut row: Vec<usize> = (0..d).map(|c| f.add(a, f.mul(c, b))).collect();
            row.push(b);
            rows.push(row);
        }
    }
    OrthogonalArray::from_rows(d, d + 1, rows)
}

/// Sigma-optimal clique partition of a complete multipartite graph with
/// `d = max part size` a prime power: every vertex lies in exactly `d` cliques.
///
/// The graph is embedded in `K_{d+1}(d)` (full parts first, each part onto
/// the lowest-indexed vertices of its host part) and each OA(d, d+1) row
/// clique is intersected with the embedded vertices.
pub fn optimal_partition_multipartite(spec: &MultipartiteSpec) -> Result<CliqueCover> {
    spec.check_partition_premises()?;
    let d = spec.d();
    let oa = build_oa(d)?;

    // host column -> graph part
    let mut parts: Vec<usize> = (0..spec.parts()).collect();
    parts.sort_by_key(|&i| (spec.part_sizes[i] != d, i));

    let cliques = oa
        .rows()
        .iter()
        .map(|row| {
            parts
                .iter()
                .enumerate()
                .filter(|&(col, &part)| row[col] < spec.part_sizes[part])
                .map(|(col, &part)| spec.vertex(part, row[col]))
                .collect()
        })
        .collect();
    Ok(CliqueCover::new(CoverMode::Partition, cliques))
}
