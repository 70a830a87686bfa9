use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph has {0} nodes, at most {max} are supported", max = crate::MAX_NODES)]
    TooManyNodes(usize),
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between nodes {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("invalid split certificate: {0}")]
    InvalidSplit(String),
    #[error("invalid threshold sequence: {0}")]
    InvalidThreshold(String),
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("graph is not split; pass assume-perfect to build facets anyway")]
    NotSplit,
    #[error("invalid incidence structure: {0}")]
    InvalidIncidence(String),
    #[error("face budget of {0} exceeded")]
    FaceBudget(usize),
    #[error("brute-force oracle needs at most {max} facets, got {got}")]
    TooManyFacets { got: usize, max: usize },
    #[error("incidence structure was not built from the certified split graph")]
    CertMismatch,
    #[error("face is not primitive")]
    NotPrimitive,
    #[error("partition violates a precondition: {0}")]
    InvalidPartition(String),
    #[error("{0} is limited to graphs on at most {1} nodes")]
    Capacity(&'static str, usize),
    #[error("parse error: {0}")]
    Parse(String),
}
