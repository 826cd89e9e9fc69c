use thiserror::Error;

/// Errors produced by the toric poset library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` is not a source")]
    NotASource(String),

    #[error("vertex `{0}` is not a sink")]
    NotASink(String),

    #[error("orientation is not acyclic")]
    NotAcyclic,

    #[error("{what} needs {actual} vertices, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("orientations live on different graphs")]
    GraphMismatch,

    #[error("toric posets have different vertex sets")]
    VertexSetMismatch,

    #[error("label `{0}` already present")]
    LabelCollision(String),

    #[error("closure representatives disagree: {0} vs {1}")]
    AmbiguousClosure(String, String),

    #[error("`{0}` is not a toric filter")]
    NotAFilter(String),

    #[error("partition {0} is not acyclic for any member of the class")]
    NotAQuotientPartition(String),

    #[error("acyclic quotients by {0} are not torically equivalent")]
    IllDefinedQuotient(String),

    #[error("coordinate for vertex `{0}` is missing")]
    MissingCoordinate(String),

    #[error("word is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("reconciliation failed between points {0} and {1}")]
    ReconciliationFailure(String, String),
}

impl Error {
    /// Stable variant name, used in machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::NotASource(_) => "NotASource",
            Error::NotASink(_) => "NotASink",
            Error::NotAcyclic => "NotAcyclic",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::GraphMismatch => "GraphMismatch",
            Error::VertexSetMismatch => "VertexSetMismatch",
            Error::LabelCollision(_) => "LabelCollision",
            Error::AmbiguousClosure(..) => "AmbiguousClosure",
            Error::NotAFilter(_) => "NotAFilter",
            Error::NotAQuotientPartition(_) => "NotAQuotientPartition",
            Error::IllDefinedQuotient(_) => "IllDefinedQuotient",
            Error::MissingCoordinate(_) => "MissingCoordinate",
            Error::NotAPermutation => "NotAPermutation",
            Error::ReconciliationFailure(..) => "ReconciliationFailure",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, actual: usize, cap: usize) -> Result<()> {
    if actual > cap {
        Err(Error::CapExceeded { what, actual, cap })
    } else {
        Ok(())
    }
}
