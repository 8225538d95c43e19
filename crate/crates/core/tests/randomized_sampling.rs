//! Sampling frequencies and the expected-sigma bound of the randomized cover.

use sigmaclique::bounds::eq1_value;
use sigmaclique::constructions::{cocktail_party, cycle_graph};
use sigmaclique::covers::verify;
use sigmaclique::randomized::{default_config, random_cover, rng_for, sample_clique};
use sigmaclique::{Graph, VertexSet};

/// Fraction of one-round samples containing both ends of `uv`, against
/// `p^2 (1-p)^k` with `k` the vertices outside `N[u] ∩ N[v]`.
fn coverage_within_three_se(g: &Graph, u: usize, v: usize, p: f64, samples: u64) {
    let outside = (0..g.n())
        .filter(|&w| w != u && w != v && !(g.has_edge(u, w) && g.has_edge(v, w)))
        .count();
    let q = p * p * (1.0 - p).powi(outside as i32);
    let mut rng = rng_for(2024, 0);
    let hits = (0..samples)
        .filter(|_| {
            let c = sample_clique(g, p, &mut rng);
            c.contains(u) && c.contains(v)
        })
        .count();
    let freq = hits as f64 / samples as f64;
    let se = (q * (1.0 - q) / samples as f64).sqrt();
    assert!((freq - q).abs() <= 3.0 * se, "freq {freq} vs {q} (se {se})");
}

#[test]
fn per_edge_coverage_probability() {
    // 8 vertices: the cocktail party graph on 4 pairs
    let g = cocktail_party(4);
    coverage_within_three_se(&g, 0, 2, 0.5, 100_000);
    // and an irregular 8-vertex graph
    let mut h = cycle_graph(8);
    for (a, b) in [(0, 2), (0, 3), (2, 5), (1, 6), (3, 7), (0, 4)] {
        h.try_add_edge(a, b).unwrap();
    }
    coverage_within_three_se(&h, 0, 2, 0.3, 100_000);
}

#[test]
fn samples_are_cliques() {
    let g = cocktail_party(5);
    let mut rng = rng_for(9, 3);
    for _ in 0..2000 {
        let c: VertexSet = sample_clique(&g, 0.4, &mut rng);
        assert!(g.is_clique(&c));
    }
}

#[test]
fn mean_sigma_below_expectation_bound() {
    let g = cocktail_party(5);
    let bound = eq1_value(10, 2).unwrap();
    let mut total = 0usize;
    for seed in 0..50 {
        let cfg = default_config(&g, seed).unwrap();
        let (c, rep) = random_cover(&g, &cfg).unwrap();
        assert!(verify(&g, &c).unwrap().verified);
        assert_eq!(rep.sigma, c.sigma());
        total += c.sigma();
    }
    assert!((total as f64 / 50.0) <= bound);
}
