//! End-to-end runs of the binary against fixtures and golden outputs.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files after an intended change.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigmaclique"))
        .args(args)
        .current_dir(fixture(""))
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    json_of(&out)
}

fn golden(name: &str, actual: &[u8]) {
    let path = fixture("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(actual),
        String::from_utf8_lossy(&expected),
        "output differs from {}",
        path.display()
    );
}

#[test]
fn solve_routes_every_objective() {
    let v = ok_json(&["solve", "g2.edges", "--objective", "scc-prime", "--quiet"]);
    assert_eq!(v["results"]["value"], 14);
    assert_eq!(v["results"]["witness"].as_array().unwrap().len(), 4);
    assert_eq!(ok_json(&["solve", "g2.edges", "-o", "cc", "--quiet"])["results"]["value"], 4);
    assert_eq!(ok_json(&["solve", "octahedron.edges", "-o", "scp", "--quiet"])["results"]["value"], 12);
    assert_eq!(ok_json(&["solve", "octahedron.dimacs", "-o", "scc", "--quiet"])["results"]["value"], 12);
    assert_eq!(ok_json(&["solve", "k3.dimacs", "-o", "cp", "--quiet"])["results"]["value"], 1);
    let empty = ok_json(&["solve", "empty.edges", "-o", "scc", "--quiet"]);
    assert_eq!(empty["results"]["value"], 0);
    assert_eq!(empty["results"]["witness"], serde_json::json!([]));
}

#[test]
fn solve_golden_and_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.cover");
    let out = run(&["solve", "g2.edges", "-o", "scc", "--witness-out", witness.to_str().unwrap(), "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    golden("solve_g2_scc.json", &out.stdout);
    let back = run(&["verify", "g2.edges", witness.to_str().unwrap(), "--quiet"]);
    assert_eq!(json_of(&back)["results"]["sigma"], 14);
}

#[test]
fn timing_is_opt_in() {
    let plain = ok_json(&["solve", "g2.edges", "-o", "cc", "--quiet"]);
    assert!(plain.get("wall_ms").is_none() && plain["results"].get("ms").is_none());
    let timed = ok_json(&["solve", "g2.edges", "-o", "cc", "--quiet", "--timing"]);
    assert!(timed["wall_ms"].is_number() && timed["results"]["ms"].is_number());
}

#[test]
fn verify_reports_and_certifies() {
    let out = run(&["verify", "octahedron.edges", "octahedron_partition.cover", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    golden("verify_octahedron.json", &out.stdout);
    let v = json_of(&out);
    assert_eq!(v["results"]["sigma"], 12);
    assert_eq!(v["results"]["bollobas"]["sum"]["exact"], "1/2");

    let alt = ok_json(&["verify", "g3.edges", "g3_alternative.cover", "--quiet"]);
    assert_eq!((alt["results"]["verified"].as_bool(), alt["results"]["sigma"].as_u64()), (Some(true), Some(26)));

    let bad = run(&["verify", "c4.edges", "c4_missing.cover"]);
    assert_eq!(bad.status.code(), Some(3));
    let v = json_of(&bad);
    assert_eq!(v["results"]["violation"]["kind"], "uncovered");
    assert_eq!((v["results"]["violation"]["u"].as_u64(), v["results"]["violation"]["v"].as_u64()), (Some(0), Some(3)));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("0-3"));
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["solve", "bad.edges", "-o", "cc"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.edges") && err.contains("line 2"), "{err}");
    assert_eq!(run(&["solve", "missing.edges", "-o", "cc"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "c4.edges", "-o", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "c4.edges", "octahedron_partition.cover"]).status.code(), Some(2));
    assert_eq!(run(&["random-cover", "octahedron.edges"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn size_cap_exits_four() {
    let out = run(&["solve", "g3.edges", "-o", "scc", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capped at 6"));
    assert_eq!(run(&["solve", "g3.edges", "-o", "scc", "--config", "defaults.conf", "--max-n", "4"]).status.code(), Some(4));
    assert_eq!(run(&["solve", "g3.edges", "-o", "scc", "--max-n", "40"]).status.code(), Some(2));
}

#[test]
fn config_pins_defaults() {
    let v = ok_json(&["random-cover", "octahedron.edges", "--config", "defaults.conf", "--quiet"]);
    assert_eq!(v["parameters"]["seed"], 5);
    let flag = ok_json(&["random-cover", "octahedron.edges", "--seed", "5", "--quiet"]);
    assert_eq!(v["results"], flag["results"]);
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "colour = blue\n").unwrap();
    assert_eq!(run(&["random-cover", "octahedron.edges", "--config", conf.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn construct_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.edges");
    let c = dir.path().join("g.cover");
    let v = ok_json(&[
        "construct", "gn", "--n", "4", "--out", g.to_str().unwrap(), "--cover", "alternative", "--cover-out",
        c.to_str().unwrap(), "--quiet",
    ]);
    assert_eq!(v["results"]["minimum"]["sigma"], 34);
    assert_eq!(v["results"]["alternative"]["sigma"], 34);
    assert_eq!(ok_json(&["verify", g.to_str().unwrap(), c.to_str().unwrap(), "--quiet"])["results"]["count"], 8);

    let k = ok_json(&["construct", "ktd", "--parts", "3,3,3,2", "--quiet"]);
    assert_eq!(k["results"]["partition"]["sigma"], 33);
    assert_eq!(k["results"]["partition"]["valency"]["min"], 3);
    let none = ok_json(&["construct", "ktd", "--t", "2", "--d", "6", "--quiet"]);
    assert!(none["results"]["partition"]["unavailable"].is_string());
    assert_eq!(run(&["construct", "ktd", "--t", "2", "--d", "6", "--cover-out", c.to_str().unwrap()]).status.code(), Some(2));

    let csv = dir.path().join("oa.csv");
    let oa = ok_json(&["construct", "oa", "--d", "3", "--csv", csv.to_str().unwrap(), "--quiet"]);
    assert_eq!(oa["results"]["pairwise_property"], true);
    golden("oa3.csv", &std::fs::read(&csv).unwrap());
    assert_eq!(run(&["construct", "oa", "--d", "6"]).status.code(), Some(2));
}

#[test]
fn bounds_commands() {
    let out = run(&["bounds", "graph", "octahedron.edges", "--solve", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    golden("bounds_octahedron.json", &out.stdout);
    let plain = ok_json(&["bounds", "graph", "c4.edges", "--quiet"]);
    assert_eq!(plain["results"]["triangle_free"], true);
    assert!(plain["results"]["certificate"].is_null());

    let ctp = ok_json(&["bounds", "ctp", "--t", "3", "--quiet"]);
    assert_eq!((ctp["results"]["lower"].as_u64(), ctp["results"]["upper"].as_u64()), (Some(6), Some(12)));

    let table = run(&["bounds", "table", "--from-exp", "10", "--to-exp", "20", "--csv", "-", "--quiet"]);
    assert_eq!(table.status.code(), Some(0));
    golden("ctp_table.csv", &table.stdout);
    let explicit = ok_json(&["bounds", "table", "--t", "1,2,3", "--quiet"]);
    assert_eq!(explicit["results"]["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn random_cover_commands() {
    let out = run(&["random-cover", "octahedron.edges", "--seed", "3", "--trials", "5", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    golden("random_octahedron.json", &out.stdout);
    let v = json_of(&out);
    for key in ["d", "p", "rounds", "bound_eq1", "sigma", "f_edges"] {
        assert!(!v["results"][key].is_null(), "{key}");
    }
    let threaded = run(&["random-cover", "octahedron.edges", "--seed", "3", "--trials", "5", "--threads", "3", "--quiet"]);
    assert_eq!(threaded.stdout, out.stdout);

    let explicit = ok_json(&["random-cover", "c4.edges", "--seed", "1", "--p", "0.3", "--rounds", "0", "--quiet"]);
    assert_eq!(explicit["results"]["sigma"], 8);
    assert_eq!(explicit["parameters"]["policy"], "explicit");
    let complete = ok_json(&["random-cover", "k3.dimacs", "--seed", "1", "--quiet"]);
    assert_eq!(complete["results"]["sigma"], 3);
}

#[test]
fn setsys_commands() {
    let cert = ok_json(&["setsys", "certify", "--t", "3", "octahedron_partition.cover", "--quiet"]);
    assert_eq!(cert["results"]["pattern_holds"], true);
    assert_eq!(cert["results"]["sum"]["exact"], "1/2");
    assert_eq!(run(&["setsys", "certify", "--t", "2", "c4_missing.cover"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("f.txt");
    let f = ok_json(&["setsys", "family", "--t", "3", "--d", "2", "octahedron_partition.cover", "--out", fam.to_str().unwrap(), "--quiet"]);
    assert_eq!((f["results"]["total_size"].as_u64(), f["results"]["valid"].as_bool()), (Some(12), Some(true)));
    assert_eq!(std::fs::read_to_string(&fam).unwrap().lines().count(), 3);

    let m = ok_json(&["setsys", "minimize", "--d", "2", "--t", "3", "--quiet"]);
    assert_eq!((m["results"]["value"].as_u64(), m["results"]["enumerated"].as_u64()), (Some(12), Some(12)));
    assert_eq!(run(&["setsys", "minimize", "--d", "3", "--t", "3"]).status.code(), Some(2));
}

#[test]
fn experiment_ctp_rows() {
    let out = run(&["experiment", "ctp", "--t-from", "2", "--t-to", "5", "--seed", "1", "--trials", "10", "--csv", "-", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    golden("experiment_ctp.csv", &out.stdout);
    let text = String::from_utf8(out.stdout).unwrap();
    let t3 = text.lines().find(|l| l.starts_with("3,")).unwrap();
    let cols: Vec<&str> = t3.split(',').collect();
    assert_eq!((cols[2], cols[4], cols[5]), ("12", "6", "12"));
    for line in text.lines().skip(1) {
        let v: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        // lower <= exact <= best-of <= expectation bound
        assert!(v[4] <= v[2] && v[2] <= v[3] && v[3] <= v[6], "{line}");
    }
}
