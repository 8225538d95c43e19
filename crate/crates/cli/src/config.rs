//! `key = value` defaults; `#` starts a comment.

use std::path::Path;

use crate::report::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub max_n: Option<usize>,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|msg| CliError::input(format!("{}: {msg}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", idx + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |_| format!("line {}: `{value}` is not a valid {key}", idx + 1);
            match key {
                "max_n" => cfg.max_n = Some(value.parse().map_err(bad)?),
                "seed" => cfg.seed = Some(value.parse().map_err(bad)?),
                "threads" => cfg.threads = Some(value.parse().map_err(bad)?),
                other => return Err(format!("line {}: unknown key `{other}`", idx + 1)),
            }
        }
        Ok(cfg)
    }
}
