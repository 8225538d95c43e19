//! Text formats for graphs, covers and set families.
//!
//! Graphs:
//! - edge list: one `u v` pair per line, 0-based; `#` starts a comment. The
//!   writer emits a `# vertices N` line, which the reader honours so that
//!   isolated vertices survive a round trip; without it `n = max id + 1`.
//! - DIMACS: `p edge N M`, then `e u v` lines, 1-based; `c` lines are comments.
//!
//! Covers: a `mode: cover` or `mode: partition` header, then one clique per
//! line as space-separated vertex ids.
//!
//! Families: one tuple per line, each set written as `[a,b,c]`.

use std::fmt::Write as _;

use crate::covers::{CliqueCover, CoverMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::setsystem::{ConjectureFamily, GroundSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}` (expected edges or dimacs)")),
        }
    }
}

/// Chooses DIMACS when the first meaningful line is a `p` or `c` line.
pub fn detect_format(text: &str) -> GraphFormat {
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        return if line.starts_with("p ") || line.starts_with("c ") || line == "c" {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        };
    }
    GraphFormat::EdgeList
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect_format(text) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found `{token}`")))
}

fn located<T>(r: Result<T>, line: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                let n = words.next().ok_or_else(|| Error::parse(line, "`# vertices` needs a count"))?;
                declared = Some(parse_usize(n, line)?);
            }
            continue;
        }
        let content = trimmed.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line, format!("expected `u v`, found `{content}`")));
        }
        edges.push((parse_usize(tokens[0], line)?, parse_usize(tokens[1], line)?, line));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    let mut g = Graph::empty(n);
    for (u, v, line) in edges {
        located(g.try_add_edge(u, v), line)?;
    }
    Ok(g)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some(t) if t.starts_with('#') => continue,
            Some("p") => {
                if g.is_some() {
                    return Err(Error::parse(line, "duplicate `p` line"));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "edges" | "col") {
                    return Err(Error::parse(line, "expected `p edge N M`"));
                }
                g = Some(Graph::empty(parse_usize(tokens[2], line)?));
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| Error::parse(line, "`e` line before the `p` line"))?;
                if tokens.len() != 3 {
                    return Err(Error::parse(line, "expected `e u v`"));
                }
                let u = parse_usize(tokens[1], line)?;
                let v = parse_usize(tokens[2], line)?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(line, "DIMACS vertex ids are 1-based"));
                }
                // repeated edges are tolerated, as many DIMACS files list both directions
                located(graph.try_add_edge(u - 1, v - 1), line)?;
            }
            Some(other) => return Err(Error::parse(line, format!("unknown DIMACS line type `{other}`"))),
        }
    }
    g.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `p edge N M` line"))
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            let _ = writeln!(out, "# vertices {}", g.n());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

pub fn parse_cover(text: &str) -> Result<CliqueCover> {
    let mut mode = None;
    let mut cliques = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("mode:") {
            if mode.is_some() {
                return Err(Error::parse(line, "duplicate mode header"));
            }
            mode = Some(rest.trim().parse::<CoverMode>().map_err(|e| Error::parse(line, e))?);
            continue;
        }
        if mode.is_none() {
            return Err(Error::parse(line, "expected a `mode: cover|partition` header first"));
        }
        let clique = content
            .split_whitespace()
            .map(|tok| parse_usize(tok, line))
            .collect::<Result<Vec<_>>>()?;
        cliques.push(clique);
    }
    let mode = mode.ok_or_else(|| Error::parse(1, "missing `mode: cover|partition` header"))?;
    Ok(CliqueCover::new(mode, cliques))
}

pub fn write_cover(c: &CliqueCover) -> String {
    let mut out = format!("mode: {}\n", c.mode().as_str());
    for clique in c.cliques() {
        let ids: Vec<String> = clique.iter().map(usize::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_family(text: &str) -> Result<ConjectureFamily> {
    let mut sets: Vec<Vec<GroundSet>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tuple = Vec::new();
        let mut rest = content;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::parse(line, format!("expected `[`, found `{rest}`")))?;
            let close = open.find(']').ok_or_else(|| Error::parse(line, "unclosed `[`"))?;
            let body = open[..close].trim();
            let set = if body.is_empty() {
                GroundSet::new()
            } else {
                body.split(',')
                    .map(|tok| parse_usize(tok.trim(), line))
                    .collect::<Result<GroundSet>>()?
            };
            tuple.push(set);
            rest = open[close + 1..].trim_start();
        }
        if let Some(first) = sets.first() {
            if first.len() != tuple.len() {
                return Err(Error::parse(line, format!("expected {} sets per tuple, found {}", first.len(), tuple.len())));
            }
        }
        sets.push(tuple);
    }
    let d = sets.first().map_or(0, Vec::len);
    Ok(ConjectureFamily { d, t: sets.len(), sets })
}

pub fn write_family(f: &ConjectureFamily) -> String {
    let mut out = String::new();
    for tuple in &f.sets {
        let parts: Vec<String> = tuple
            .iter()
            .map(|s| format!("[{}]", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gn, cocktail_party, optimal_partition_multipartite, MultipartiteSpec};
    use crate::setsystem::family_from_cover;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_graph("# a 4-cycle\n0 1\n1 2 # inline\n\n2 3\n3 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        let g = parse_graph("# vertices 6\n0 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (6, 1));
        assert_eq!(parse_graph("").unwrap().n(), 0);
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(0, 2));
        let err = parse_graph("p edge 3 1\ne 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("p edge 2 1\ne 1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(parse_graph("0 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("0 1\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_cover("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_cover("mode: both\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn cover_format() {
        let c = parse_cover("mode: partition\n0 1 2\n# note\n3 4\n").unwrap();
        assert_eq!(c.mode(), CoverMode::Partition);
        assert_eq!(c.cliques(), &[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(parse_cover(&write_cover(&c)).unwrap(), c);
    }

    #[test]
    fn family_format() {
        let cover = optimal_partition_multipartite(&MultipartiteSpec::uniform(3, 2).unwrap()).unwrap();
        let fam = family_from_cover(3, 2, &cover).unwrap();
        let text = write_family(&fam);
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with('['));
        assert_eq!(parse_family(&text).unwrap(), fam);
        assert!(parse_family("[1,2] [3\n").is_err());
        assert!(parse_family("[1] [2]\n[3]\n").is_err());
    }

    #[test]
    fn writers_round_trip_constructions() {
        for g in [build_gn(3).unwrap(), cocktail_party(4)] {
            for fmt in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
                let back = parse_graph(&write_graph(&g, fmt)).unwrap();
                assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
                assert_eq!(back.n(), g.n());
            }
        }
    }

    proptest! {
        #[test]
        fn graph_round_trip(n in 0usize..12, bits in prop::collection::vec(any::<bool>(), 66), dimacs in any::<bool>()) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.try_add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let fmt = if dimacs { GraphFormat::Dimacs } else { GraphFormat::EdgeList };
            prop_assert_eq!(parse_graph(&write_graph(&g, fmt)).unwrap(), g);
        }
    }
}
