//! `sigmaclique`: JSON reports on stdout, a short summary on stderr.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure, 4 size cap.

mod args;
mod commands;
mod config;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::Cli;
use commands::Context;
use config::Config;
use report::{CliError, Inputs, RunReport};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let start = Instant::now();
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let threads = cli.threads.or(config.threads).unwrap_or(1);
    if threads == 0 {
        return Err(CliError::input("--threads must be at least 1"));
    }
    if threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::input(format!("cannot start {threads} threads: {e}")))?;
    }
    let ctx = Context {
        quiet: cli.quiet,
        threads,
        timing: cli.timing,
        config,
    };
    let mut inputs = Inputs::default();
    let outcome = commands::run(&cli.command, &ctx, &mut inputs)?;
    if !ctx.quiet {
        for line in &outcome.summary {
            eprintln!("{line}");
        }
    }
    let text = match outcome.stdout_csv {
        Some(csv) => csv,
        None => {
            let report = RunReport {
                command: outcome.command.to_string(),
                input_digest: inputs.digest(),
                parameters: outcome.parameters,
                results: outcome.results,
                wall_ms: ctx.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
        }
    };
    // a closed pipe (e.g. `| head`) is not an error of ours
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            return Err(CliError::input(format!("cannot write output: {e}")));
        }
        _ => {}
    }
    Ok(outcome.exit)
}
