use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use sigmaclique::bounds::{
    asymptotic_csv, asymptotic_table, ctp_bounds, delta_t, eq1_upper, eq1_value, sigma_t, theorem2_bounds,
    SolvedValues,
};
use sigmaclique::constructions::{
    build_gn, build_multipartite, build_oa, canonical_covers_gn, cocktail_party, optimal_partition_multipartite,
    MultipartiteSpec,
};
use sigmaclique::covers::{report, verify};
use sigmaclique::exact::{ExactSolver, Objective};
use sigmaclique::io::{self, GraphFormat};
use sigmaclique::randomized::{best_of, best_of_parallel, default_config, RandomCoverConfig};
use sigmaclique::setsystem::{bollobas_sum, cover_to_pairs, family_from_cover, min_family_size, BollobasPairs};
use sigmaclique::{CliqueCover, Graph};

use crate::args::*;
use crate::config::Config;
use crate::report::{write_file, CliError, Inputs, EXIT_UNVERIFIED};

pub struct Context {
    pub quiet: bool,
    pub threads: usize,
    pub timing: bool,
    pub config: Config,
}

/// What a command produced, before it is wrapped in a report.
pub struct Outcome {
    pub command: &'static str,
    pub parameters: Value,
    pub results: Value,
    pub summary: Vec<String>,
    /// CSV requested on stdout in place of the JSON report.
    pub stdout_csv: Option<String>,
    pub exit: i32,
}

impl Outcome {
    fn new(command: &'static str, parameters: Value, results: Value) -> Self {
        Self {
            command,
            parameters,
            results,
            summary: Vec::new(),
            stdout_csv: None,
            exit: 0,
        }
    }

    fn say(mut self, line: impl Into<String>) -> Self {
        self.summary.push(line.into());
        self
    }
}

pub fn run(cmd: &Command, ctx: &Context, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    match cmd {
        Command::Solve(a) => solve(a, ctx, inputs),
        Command::Verify(a) => verify_cmd(a, inputs),
        Command::Construct(c) => construct(c),
        Command::Bounds(b) => bounds(b, ctx, inputs),
        Command::RandomCover(a) => random(a, ctx, inputs),
        Command::Setsys(s) => setsys(s, inputs),
        Command::Experiment(ExperimentCommand::Ctp {
            t_from,
            t_to,
            seed,
            trials,
            exact_up_to,
            csv,
        }) => experiment_ctp(*t_from, *t_to, *seed, *trials, *exact_up_to, csv.as_deref(), ctx),
    }
}

fn located(path: &Path, e: sigmaclique::Error) -> CliError {
    let mut err = CliError::from(e);
    err.message = format!("{}: {}", path.display(), err.message);
    err
}

fn load_graph(input: &GraphInput, inputs: &mut Inputs) -> Result<Graph, CliError> {
    let text = inputs.read(&input.graph)?;
    let parsed = match input.format {
        FormatArg::Auto => io::parse_graph(&text),
        FormatArg::Edges => io::parse_edge_list(&text),
        FormatArg::Dimacs => io::parse_dimacs(&text),
    };
    parsed.map_err(|e| located(&input.graph, e))
}

fn load_cover(path: &Path, inputs: &mut Inputs) -> Result<CliqueCover, CliError> {
    let text = inputs.read(path)?;
    io::parse_cover(&text).map_err(|e| located(path, e))
}

fn output_format(f: FormatArg) -> GraphFormat {
    match f {
        FormatArg::Dimacs => GraphFormat::Dimacs,
        FormatArg::Auto | FormatArg::Edges => GraphFormat::EdgeList,
    }
}

fn solver(flag: Option<usize>, ctx: &Context) -> Result<ExactSolver, CliError> {
    match flag.or(ctx.config.max_n) {
        Some(cap) => Ok(ExactSolver::with_max_n(cap)?),
        None => Ok(ExactSolver::default()),
    }
}

fn seed(flag: Option<u64>, ctx: &Context) -> Result<u64, CliError> {
    flag.or(ctx.config.seed)
        .ok_or_else(|| CliError::input("randomized commands need --seed (or seed = ... in --config)"))
}

fn cliques_json(c: &CliqueCover) -> Value {
    json!(c.cliques())
}

fn solve(a: &SolveArgs, ctx: &Context, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let objective: Objective = a.objective.parse().map_err(CliError::input)?;
    let g = load_graph(&a.input, inputs)?;
    let r = solver(a.max_n, ctx)?.solve(&g, objective)?;
    if let Some(path) = &a.witness_out {
        write_file(path, &io::write_cover(&r.witness))?;
    }
    let mut results = json!({
        "objective": objective.as_str(),
        "value": r.value,
        "witness": cliques_json(&r.witness),
        "nodes": r.nodes_explored,
    });
    if ctx.timing {
        results["ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
    }
    let params = json!({ "objective": objective.as_str(), "n": g.n(), "m": g.m() });
    Ok(Outcome::new("solve", params, results).say(format!(
        "{objective}(G) = {} on n = {}, m = {} ({} cliques in the witness, {} search nodes)",
        r.value,
        g.n(),
        g.m(),
        r.witness.count(),
        r.nodes_explored
    )))
}

/// `t` when `g` is `K_t(2)` laid out as `x_i = 2i`, `y_i = 2i + 1`.
fn cocktail_party_order(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 2 || n % 2 == 1 {
        return None;
    }
    let missing: Vec<(usize, usize)> = g.complement().edges().collect();
    let expected: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    (missing == expected).then_some(n / 2)
}

fn pairs_json(pairs: &BollobasPairs) -> Result<Value, CliError> {
    let sum = bollobas_sum(pairs)?;
    let violation = pairs.pattern_violation();
    Ok(json!({
        "pairs": pairs.pairs.iter().map(|(a, b)| json!({ "a": a, "b": b })).collect::<Vec<_>>(),
        "pattern_holds": violation.is_none(),
        "pattern_violation": violation.map(|(i, j)| json!({ "i": i + 1, "j": j + 1 })),
        "sum": { "exact": sum.to_string(), "value": sum.to_f64() },
        "sum_at_most_one": sum <= num_rational::BigRational::from_integer(1.into()),
    }))
}

fn verify_cmd(a: &VerifyArgs, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.input, inputs)?;
    let cover = load_cover(&a.cover, inputs)?;
    if let Some(v) = cover.max_vertex().filter(|&v| v >= g.n()) {
        return Err(CliError::input(format!(
            "cover mentions vertex {v} but the graph has {} vertices",
            g.n()
        )));
    }
    let rep = report(&g, &cover)?;
    let mut results = serde_json::to_value(&rep).expect("cover reports serialize");
    let mut out_summary = if rep.verified {
        format!("verified {}: {} cliques, sigma {}", rep.mode.as_str(), rep.count, rep.sigma)
    } else {
        format!("not a valid {}: {}", rep.mode.as_str(), rep.violation.as_ref().map_or(String::new(), |v| v.to_string()))
    };
    if let (true, Some(t)) = (rep.verified, cocktail_party_order(&g)) {
        let pairs = cover_to_pairs(t, &cover)?;
        let cert = pairs_json(&pairs)?;
        out_summary.push_str(&format!("; set-pair sum {}", cert["sum"]["exact"].as_str().unwrap_or("?")));
        results["bollobas"] = cert;
    }
    let params = json!({ "n": g.n(), "m": g.m(), "mode": rep.mode.as_str() });
    let mut out = Outcome::new("verify", params, results).say(out_summary);
    if !rep.verified {
        out.exit = EXIT_UNVERIFIED;
    }
    Ok(out)
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "m": g.m(), "labels": g.labels() })
}

fn construct(c: &ConstructCommand) -> Result<Outcome, CliError> {
    match c {
        ConstructCommand::Gn {
            n,
            out,
            format,
            cover,
            cover_out,
        } => {
            let g = build_gn(*n)?;
            if let Some(path) = out {
                write_file(path, &io::write_graph(&g, output_format(*format)))?;
            }
            let (minimum, alternative) = canonical_covers_gn(*n)?;
            let mut results = json!({ "graph": graph_json(&g) });
            for (name, cv) in [("minimum", &minimum), ("alternative", &alternative)] {
                let rep = report(&g, cv)?;
                results[name] = json!({
                    "count": rep.count,
                    "sigma": rep.sigma,
                    "verified": rep.verified,
                    "cliques": cliques_json(cv),
                });
            }
            if let Some(path) = cover_out {
                let chosen = match cover.unwrap_or(GnCover::Minimum) {
                    GnCover::Minimum => &minimum,
                    GnCover::Alternative => &alternative,
                };
                write_file(path, &io::write_cover(chosen))?;
            }
            let params = json!({ "family": "gn", "n": n });
            Ok(Outcome::new("construct gn", params, results).say(format!(
                "G_{n}: {} vertices, {} edges; covers with {} cliques (sigma {}) and {} cliques (sigma {})",
                g.n(),
                g.m(),
                minimum.count(),
                minimum.sigma(),
                alternative.count(),
                alternative.sigma()
            )))
        }
        ConstructCommand::Ktd {
            t,
            d,
            parts,
            out,
            format,
            cover_out,
        } => {
            let spec = match (parts, t, d) {
                (Some(sizes), _, _) => MultipartiteSpec::new(sizes.clone())?,
                (None, Some(t), Some(d)) => MultipartiteSpec::uniform(*t, *d)?,
                _ => return Err(CliError::input("give --parts, or both --t and --d")),
            };
            let g = build_multipartite(&spec);
            if let Some(path) = out {
                write_file(path, &io::write_graph(&g, output_format(*format)))?;
            }
            let mut results = json!({ "graph": graph_json(&g), "part_sizes": spec.part_sizes(), "d": spec.d() });
            let mut o = Outcome::new("construct ktd", json!({ "part_sizes": spec.part_sizes() }), Value::Null);
            match optimal_partition_multipartite(&spec) {
                Ok(cover) => {
                    let rep = report(&g, &cover)?;
                    o = o.say(format!(
                        "{} vertices in {} parts: partition into {} cliques, sigma {} = n d, every valency {}",
                        g.n(),
                        spec.parts(),
                        rep.count,
                        rep.sigma,
                        rep.valency.max
                    ));
                    results["partition"] = json!({
                        "count": rep.count,
                        "sigma": rep.sigma,
                        "valency": rep.valency,
                        "verified": rep.verified,
                        "cliques": cliques_json(&cover),
                    });
                    if let Some(path) = cover_out {
                        write_file(path, &io::write_cover(&cover))?;
                    }
                }
                Err(e) => {
                    if cover_out.is_some() {
                        return Err(e.into());
                    }
                    o = o.say(format!("{} vertices; no optimal partition built: {e}", g.n()));
                    results["partition"] = json!({ "unavailable": e.to_string() });
                }
            }
            o.results = results;
            Ok(o)
        }
        ConstructCommand::Oa { d, csv } => {
            let oa = build_oa(*d)?;
            if let Some(path) = csv {
                write_file(path, &oa.to_csv())?;
            }
            let check = oa.check();
            let results = json!({
                "symbols": oa.symbols(),
                "columns": oa.columns(),
                "rows": oa.rows().iter().map(|r| r.iter().map(|s| s + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "pairwise_property": check.is_ok(),
            });
            Ok(Outcome::new("construct oa", json!({ "d": d }), results).say(format!(
                "OA({d},{}) with {} rows; pairwise property {}",
                d + 1,
                d * d,
                if check.is_ok() { "holds" } else { "FAILS" }
            )))
        }
    }
}

fn bounds(b: &BoundsCommand, ctx: &Context, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    match b {
        BoundsCommand::Graph { input, solve, max_n } => {
            let g = load_graph(input, inputs)?;
            let solved = if *solve {
                let s = solver(*max_n, ctx)?;
                let value = |o| s.solve(&g, o).map(|r| Some(r.value as u64));
                Some(SolvedValues {
                    scc: value(Objective::Scc)?,
                    scp: value(Objective::Scp)?,
                    cp: value(Objective::Cp)?,
                })
            } else {
                None
            };
            let rep = theorem2_bounds(&g, solved)?;
            let mut out = Outcome::new(
                "bounds graph",
                json!({ "n": g.n(), "m": g.m(), "solve": solve }),
                serde_json::to_value(&rep).expect("bound reports serialize"),
            );
            let lower = rep.scc_lower_t2.as_ref().map_or("-".to_string(), |b| b.0.to_string());
            out = out.say(format!("{lower} <= scc <= scp <= {}", rep.scp_upper_t2));
            if let Some(cert) = &rep.certificate {
                for line in &cert.checks {
                    out = out.say(format!("[{}] {}", if line.holds { "ok" } else { "FAIL" }, line.relation));
                }
                if !cert.holds {
                    out.exit = EXIT_UNVERIFIED;
                }
            }
            Ok(out)
        }
        BoundsCommand::Ctp { t } => {
            let (lower, upper) = ctp_bounds(*t)?;
            let (sigma, delta) = (sigma_t(*t)?, delta_t(*t)?);
            let n = 2 * *t as usize;
            let eq1 = if *t >= 2 { Some(eq1_upper(n, 2)?) } else { None };
            let results = json!({
                "t": t, "sigma": sigma, "delta": delta, "lower": lower, "upper": upper, "eq1_upper": eq1,
            });
            Ok(Outcome::new("bounds ctp", json!({ "t": t }), results)
                .say(format!("{lower} = t δ(t) <= scc(K_{t}(2)) <= t σ(t) = {upper}")))
        }
        BoundsCommand::Table { t, from_exp, to_exp, csv } => {
            let values: Vec<u64> = match t {
                Some(v) => v.clone(),
                None => {
                    if from_exp > to_exp || *to_exp > 62 {
                        return Err(CliError::input("need --from-exp <= --to-exp <= 62"));
                    }
                    (*from_exp..=*to_exp).map(|k| 1u64 << k).collect()
                }
            };
            let rows = asymptotic_table(&values)?;
            let text = asymptotic_csv(&rows);
            let params = json!({ "t": values });
            let mut out = Outcome::new("bounds table", params, json!({ "rows": rows }));
            if let Some(last) = rows.last() {
                out = out.say(format!(
                    "t = {}: t δ / (t log2 t) = {:.4}, t σ / (t log2 t) = {:.4}",
                    last.t, last.ratio_lower_log2, last.ratio_upper_log2
                ));
            }
            csv_sink(&mut out, csv.as_deref(), text)?;
            Ok(out)
        }
    }
}

fn csv_sink(out: &mut Outcome, csv: Option<&Path>, text: String) -> Result<(), CliError> {
    match csv {
        Some(p) if p == Path::new("-") => out.stdout_csv = Some(text),
        Some(p) => write_file(p, &text)?,
        None => {}
    }
    Ok(())
}

fn random_config(a: &RandomArgs, g: &Graph, seed: u64) -> Result<RandomCoverConfig, CliError> {
    match (a.p, a.rounds) {
        (Some(p), Some(rounds)) => Ok(RandomCoverConfig::explicit(p, rounds, seed)?),
        _ => Ok(default_config(g, seed)?),
    }
}

fn run_trials(g: &Graph, cfg: &RandomCoverConfig, trials: u64, ctx: &Context) -> sigmaclique::Result<(CliqueCover, sigmaclique::randomized::RandomCoverReport)> {
    if ctx.threads > 1 {
        best_of_parallel(g, cfg, trials)
    } else {
        best_of(g, cfg, trials)
    }
}

fn random(a: &RandomArgs, ctx: &Context, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let seed = seed(a.seed, ctx)?;
    if a.trials == 0 {
        return Err(CliError::input("--trials must be at least 1"));
    }
    let g = load_graph(&a.input, inputs)?;
    let cfg = random_config(a, &g, seed)?;
    let (cover, rep) = run_trials(&g, &cfg, a.trials, ctx)?;
    let verdict = verify(&g, &cover)?;
    if let Some(path) = &a.cover_out {
        write_file(path, &io::write_cover(&cover))?;
    }
    let mut results = serde_json::to_value(&rep).expect("random reports serialize");
    results["verified"] = json!(verdict.verified);
    results["cliques"] = cliques_json(&cover);
    let params = json!({
        "seed": seed,
        "trials": a.trials,
        "p": cfg.p,
        "rounds": cfg.rounds,
        "policy": if a.p.is_some() { "explicit" } else { "paper-default" },
    });
    let bound = rep.bound_eq1.map_or("n/a".to_string(), |b| format!("{b:.1}"));
    let mut out = Outcome::new("random-cover", params, results).say(format!(
        "sigma {} with {} cliques ({} sampled, {} leftover edges); d = {}, p = {:.4}, rounds = {}; expectation bound {bound}",
        rep.sigma, rep.count, rep.sampled_cliques, rep.f_edges, rep.d, rep.p, rep.rounds
    ));
    if !verdict.verified {
        out.exit = EXIT_UNVERIFIED;
    }
    Ok(out)
}

fn setsys(s: &SetsysCommand, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    match s {
        SetsysCommand::Certify { t, cover } => {
            let c = load_cover(cover, inputs)?;
            let g = cocktail_party(*t);
            verify(&g, &c)?.into_result()?;
            let pairs = cover_to_pairs(*t, &c)?;
            let cert = pairs_json(&pairs)?;
            let holds = cert["pattern_holds"].as_bool() == Some(true) && cert["sum_at_most_one"].as_bool() == Some(true);
            let line = format!(
                "{} pairs, pattern {}, sum {}",
                pairs.len(),
                if cert["pattern_holds"].as_bool() == Some(true) { "holds" } else { "FAILS" },
                cert["sum"]["exact"].as_str().unwrap_or("?")
            );
            let mut out = Outcome::new("setsys certify", json!({ "t": t, "sigma": c.sigma() }), cert).say(line);
            if !holds {
                out.exit = EXIT_UNVERIFIED;
            }
            Ok(out)
        }
        SetsysCommand::Family { t, d, cover, out } => {
            let c = load_cover(cover, inputs)?;
            let fam = family_from_cover(*t, *d, &c)?;
            if let Some(path) = out {
                write_file(path, &io::write_family(&fam))?;
            }
            let defect = fam.check().err().map(|e| e.to_string());
            let results = json!({
                "total_size": fam.total_size(),
                "valid": defect.is_none(),
                "defect": defect,
                "family": io::write_family(&fam).lines().collect::<Vec<_>>(),
            });
            let mut o = Outcome::new("setsys family", json!({ "t": t, "d": d }), results)
                .say(format!("family of {t} tuples of {d} sets, total size {}", fam.total_size()));
            if fam.check().is_err() {
                o.exit = EXIT_UNVERIFIED;
            }
            Ok(o)
        }
        SetsysCommand::Minimize {
            d,
            t,
            ground_cap,
            enumerate,
        } => {
            let best = min_family_size(*d, *t, *ground_cap)?;
            let direct = match (best.enumerated, enumerate) {
                (Some(v), _) => Some(v),
                (None, true) => Some(sigmaclique::setsystem::min_family_size_enumerated(*d, *t, *ground_cap)?),
                (None, false) => None,
            };
            let results = json!({
                "value": best.value,
                "enumerated": direct,
                "agree": direct.map(|v| v == best.value),
                "witness": io::write_family(&best.witness).lines().collect::<Vec<_>>(),
            });
            let mut line = format!("minimum total size for d = {d}, t = {t}: {}", best.value);
            if let Some(v) = direct {
                line.push_str(&format!(" (direct enumeration: {v})"));
            }
            let mut o = Outcome::new("setsys minimize", json!({ "d": d, "t": t, "ground_cap": ground_cap }), results).say(line);
            if direct.is_some_and(|v| v != best.value) {
                o.exit = EXIT_UNVERIFIED;
            }
            Ok(o)
        }
    }
}

pub const CTP_CSV_HEADER: &str = "t,n,exact_scc,best_of_sigma,t_delta,t_sigma,eq1_upper";

fn experiment_ctp(
    t_from: usize,
    t_to: usize,
    seed_flag: Option<u64>,
    trials: u64,
    exact_up_to: usize,
    csv: Option<&Path>,
    ctx: &Context,
) -> Result<Outcome, CliError> {
    let seed = seed(seed_flag, ctx)?;
    if t_from < 2 || t_from > t_to {
        return Err(CliError::input("need 2 <= --t-from <= --t-to"));
    }
    if trials == 0 {
        return Err(CliError::input("--trials must be at least 1"));
    }
    let exact = ExactSolver::default();
    let mut text = format!("{CTP_CSV_HEADER}\n");
    let mut rows = Vec::new();
    let mut summary = Vec::new();
    for t in t_from..=t_to {
        let g = cocktail_party(t);
        let n = 2 * t;
        let exact_value = if t <= exact_up_to {
            Some(exact.solve(&g, Objective::Scc)?.value)
        } else {
            None
        };
        // one independent stream per row
        let cfg = default_config(&g, seed.wrapping_add(t as u64))?;
        let (cover, _) = run_trials(&g, &cfg, trials, ctx)?;
        let (lower, upper) = ctp_bounds(t as u64)?;
        let eq1 = eq1_upper(n, 2)?;
        text.push_str(&format!(
            "{t},{n},{},{},{lower},{upper},{eq1}\n",
            exact_value.map_or(String::new(), |v| v.to_string()),
            cover.sigma()
        ));
        summary.push(format!(
            "t = {t}: {lower} <= exact {} ; best-of {} <= expectation bound {:.1}",
            exact_value.map_or("-".to_string(), |v| v.to_string()),
            cover.sigma(),
            eq1_value(n, 2)?
        ));
        rows.push(json!({
            "t": t, "n": n, "exact_scc": exact_value, "best_of_sigma": cover.sigma(),
            "t_delta": lower, "t_sigma": upper, "eq1_upper": eq1,
        }));
    }
    let params = json!({ "t_from": t_from, "t_to": t_to, "seed": seed, "trials": trials, "exact_up_to": exact_up_to });
    let mut out = Outcome::new("experiment ctp", params, json!({ "rows": rows }));
    out.summary = summary;
    csv_sink(&mut out, csv, text)?;
    Ok(out)
}
