use thiserror::Error;

use crate::structure::ConfigMatch;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("empty graph has undefined mad")]
    EmptyGraph,

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("embedding is not plane")]
    NotPlane,

    #[error("input graph must be connected")]
    Disconnected,

    #[error("lemma {0} requires an embedding")]
    EmbeddingRequired(u8),

    #[error("unknown lemma {0}")]
    UnknownLemma(u8),

    #[error("list of vertex {vertex} has {len} colours, need {need}")]
    ShortList { vertex: usize, len: usize, need: usize },

    #[error("oracle guard: {0}")]
    OracleGuard(String),

    #[error("reducible configuration present: {0}")]
    ConfigurationPresent(Box<ConfigMatch>),

    #[error("reducible configuration missed: component with {edges} edges on {vertices} vertices")]
    ConfigurationMissed { vertices: usize, edges: usize },

    #[error("no reducible configuration found in a component of {0} vertices")]
    NoConfiguration(usize),

    #[error("extension failed at vertex {vertex} ({context})")]
    ExtensionFailed { vertex: usize, context: String },
}

impl Error {
    /// Errors that signal a falsified reducibility or dichotomy claim rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::ConfigurationMissed { .. }
                | Error::NoConfiguration(_)
                | Error::ExtensionFailed { .. }
        )
    }
}
