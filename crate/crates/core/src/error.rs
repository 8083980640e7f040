use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parallel edges are not allowed here")]
    ParallelEdges,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported uniformity {0}")]
    Uniformity(usize),
    #[error("hypergraph is not linear")]
    NotLinear,
    #[error("oracle size limit exceeded: {0}")]
    OracleLimit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("malformed decomposition: {0}")]
    Decomposition(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
