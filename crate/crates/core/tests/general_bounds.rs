//! General-graph bounds checked by integer cross-multiplication.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use sigmaclique::bounds::{theorem2_bounds, SolvedValues};
use sigmaclique::constructions::{connected_catalog, cycle_graph, path_graph};
use sigmaclique::exact::{solve_cp, solve_scc, solve_scp};
use sigmaclique::Graph;

fn triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.neighbors(u).intersection_len(g.neighbors(v)) == 0)
}

#[test]
fn bounds_hold_on_catalog() {
    for n in 2..=6 {
        for g in connected_catalog(n).unwrap() {
            let m = g.m();
            let omega = g.clique_number();
            let scc = solve_scc(&g).unwrap().value;
            let scp = solve_scp(&g).unwrap().value;
            let cp = solve_cp(&g).unwrap().value;
            assert!(2 * m <= scc * (omega - 1));
            assert!(scc <= scp && scp <= 2 * m);
            assert!(scp * scp <= cp * (2 * m + scp));
            if triangle_free(&g) {
                assert_eq!((scc, scp, cp), (2 * m, 2 * m, m));
            }
            let solved = SolvedValues {
                scc: Some(scc as u64),
                scp: Some(scp as u64),
                cp: Some(cp as u64),
            };
            let report = theorem2_bounds(&g, Some(solved)).unwrap();
            assert_eq!(report.triangle_free, triangle_free(&g));
            assert!(report.certificate.unwrap().holds);
        }
    }
}

#[test]
fn removing_an_edge_of_a_triangle_free_graph_lowers_scp_by_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = vec![cycle_graph(7), path_graph(6)];
    while graphs.len() < 30 {
        let n = 5 + (rng.next_u32() % 4) as usize;
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_u32() % 3 == 0 && g.neighbors(u).intersection_len(g.neighbors(v)) == 0 {
                    g.try_add_edge(u, v).unwrap();
                }
            }
        }
        if g.m() >= 1 {
            graphs.push(g);
        }
    }
    for g in graphs {
        assert!(triangle_free(&g));
        let before = solve_scp(&g).unwrap().value;
        let (u, v) = g.edges().next().unwrap();
        let h = Graph::from_edges(g.n(), g.edges().filter(|&e| e != (u, v))).unwrap();
        assert_eq!(before - solve_scp(&h).unwrap().value, 2);
    }
}

#[test]
fn octahedron_report_values() {
    let g = sigmaclique::constructions::cocktail_party(3);
    let report = theorem2_bounds(&g, None).unwrap();
    assert_eq!((report.m, report.omega, report.scp_upper_t2), (12, 3, 24));
    assert_eq!(report.scc_lower_t2.unwrap().to_f64(), 12.0);
    assert_eq!(report.d, 2);
}
