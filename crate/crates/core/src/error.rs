use thiserror::Error;

use crate::covers::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Exact search refuses graphs above the configured vertex cap.
    #[error("graph has {n} vertices; exact solving is capped at {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("cover does not verify: {0}")]
    Unverified(Violation),

    /// A construction or algorithm was asked to run outside its premises.
    #[error("{0}")]
    Premise(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn premise(msg: impl Into<String>) -> Self {
        Error::Premise(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
