use std::fmt;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use sigmaclique::Error;

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNVERIFIED: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_SIZE_CAP,
            Error::Unverified(_) => EXIT_UNVERIFIED,
            _ => EXIT_INPUT,
        };
        Self { code, message: e.to_string() }
    }
}

/// Self-contained record of one invocation.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 over the input files, each preceded by its byte length.
    pub input_digest: Option<String>,
    pub parameters: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Input files read by a command, kept in order for the digest.
#[derive(Default)]
pub struct Inputs {
    hasher: Option<Sha256>,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let hasher = self.hasher.get_or_insert_with(Sha256::new);
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(&bytes);
        String::from_utf8(bytes).map_err(|_| CliError::input(format!("{} is not UTF-8 text", path.display())))
    }

    pub fn digest(self) -> Option<String> {
        self.hasher.map(|h| format!("{:x}", h.finalize()))
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}
