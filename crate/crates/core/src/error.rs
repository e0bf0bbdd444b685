use thiserror::Error;

/// Errors raised by the algebra, graph and renormalization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown edge id '{0}'")]
    UnknownEdge(String),

    #[error("unknown vertex id '{0}'")]
    UnknownVertex(String),

    #[error("unknown external leg id '{0}'")]
    UnknownLeg(String),

    #[error("{op} requires a connected graph")]
    Disconnected { op: &'static str },

    #[error("{op} requires a one-particle-irreducible graph")]
    NotOnePi { op: &'static str },

    #[error("cannot contract self-loop '{0}' in a ribbon graph")]
    SelfLoopContraction(String),

    #[error("graph has {edges} edges, enumeration supports at most {max}")]
    TooManyEdges { edges: usize, max: usize },

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("missing value for variable '{0}'")]
    UnboundVariable(String),

    #[error("{0}")]
    Precondition(String),

    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("external momenta violate conservation: total {0}")]
    MomentumNotConserved(String),

    #[error("negative power of theta required: {0}")]
    NegativeThetaPower(String),

    #[error("gluing data arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("gluing data does not respect the cyclic order: {0}")]
    CyclicOrderViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cross-check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
