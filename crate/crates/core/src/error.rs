use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("vertex {0} already exists")]
    DuplicateVertex(Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is already in the graph")]
    EdgeExists(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("solver requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has {n} vertices; brute force is capped at {cap}, use another backend")]
    Capacity { n: usize, cap: usize },
    #[error("node budget of {budget} exhausted")]
    Budget { budget: u64 },
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("structure: {0}")]
    Structure(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generation failed after {attempts} attempts (acceptance rate {accepted}/{attempts})")]
    Generation { attempts: usize, accepted: usize },
}

impl Error {
    /// Budget exhaustion is the only recoverable solver failure; scans skip
    /// such instances instead of aborting.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
