//! Plain exhaustive search used to cross-check the branch and bound.
//!
//! Branches on the lowest-indexed uncovered edge over every clique containing
//! it, with no bounds, orderings or dominance rules. Results are memoized by
//! covered-edge set, which changes nothing but the running time.

use std::collections::HashMap;

use super::Objective;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_N: usize = 8;

pub fn oracle_cc(g: &Graph) -> Result<usize> {
    oracle_value(g, Objective::Cc)
}

pub fn oracle_cp(g: &Graph) -> Result<usize> {
    oracle_value(g, Objective::Cp)
}

pub fn oracle_scc(g: &Graph) -> Result<usize> {
    oracle_value(g, Objective::Scc)
}

pub fn oracle_scp(g: &Graph) -> Result<usize> {
    oracle_value(g, Objective::Scp)
}

/// Exact optimum for `cc`, `cp`, `scc` or `scp` on graphs with at most eight vertices.
pub fn oracle_value(g: &Graph, objective: Objective) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { n, cap: ORACLE_MAX_N });
    }
    if objective == Objective::SccPrime {
        return Err(Error::premise("the oracle covers cc, cp, scc and scp only"));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v)));

    // Every vertex subset that is a clique with at least one edge.
    let mut cliques: Vec<(u64, usize)> = Vec::new();
    for subset in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
        if vs.len() < 2 {
            continue;
        }
        let mut mask = 0u64;
        let mut ok = true;
        'pairs: for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                match index(vs[i], vs[j]) {
                    Some(e) => mask |= 1 << e,
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            cliques.push((mask, vs.len()));
        }
    }

    let full = (1u64 << edges.len()) - 1;
    let mut memo = HashMap::new();
    Ok(best_completion(0, full, &cliques, objective, &mut memo))
}

fn best_completion(
    covered: u64,
    full: u64,
    cliques: &[(u64, usize)],
    objective: Objective,
    memo: &mut HashMap<u64, usize>,
) -> usize {
    if covered == full {
        return 0;
    }
    if let Some(&v) = memo.get(&covered) {
        return v;
    }
    let e = (!covered & full).trailing_zeros();
    let partition = matches!(objective, Objective::Cp | Objective::Scp);
    let mut best = usize::MAX;
    for &(mask, size) in cliques {
        if mask >> e & 1 == 0 || (partition && mask & covered != 0) {
            continue;
        }
        let cost = match objective {
            Objective::Cc | Objective::Cp => 1,
            _ => size,
        };
        let rest = best_completion(covered | mask, full, cliques, objective, memo);
        best = best.min(cost + rest);
    }
    memo.insert(covered, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cocktail_party, complete_graph, cycle_graph, path_graph};

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_scc(&path_graph(3)).unwrap(), 4);
        assert_eq!(oracle_scc(&complete_graph(4)).unwrap(), 4);
        assert_eq!(oracle_cc(&cycle_graph(5)).unwrap(), 5);
        assert_eq!(oracle_scc(&Graph::empty(3)).unwrap(), 0);
        assert!(matches!(oracle_scc(&complete_graph(9)), Err(Error::TooLarge { n: 9, cap: 8 })));
    }

    #[test]
    fn octahedron_regression() {
        let g = cocktail_party(3);
        assert_eq!(oracle_scc(&g).unwrap(), 12);
        assert_eq!(oracle_scp(&g).unwrap(), 12);
        assert_eq!(oracle_cc(&g).unwrap(), 4);
        assert_eq!(oracle_cp(&g).unwrap(), 4);
    }
}
