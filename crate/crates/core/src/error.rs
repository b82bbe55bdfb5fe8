use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at `{0}` is not allowed in a simple graph")]
    SelfLoop(String),
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogName(String),
    #[error("generator `{0}` is not a squarefree quadratic monomial")]
    NotQuadraticSquarefree(String),
    #[error("generator `{0}` is not squarefree")]
    NotSquarefree(String),
    #[error(
        "ideal needs {vertices} polarized variables; the homology oracle refuses more than {limit}"
    )]
    TooLarge { vertices: usize, limit: usize },
    #[error("multiplicity for `{0}` must be at least 1")]
    ZeroMultiplicity(String),
    #[error("substitute graph shares vertex `{0}` with the host")]
    LabelClash(String),
    #[error("monomial `{0}` is not a product of {1} edges")]
    NotAProduct(String, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("unsupported field characteristic {0}; use 0 or a prime below 65536")]
    BadCharacteristic(u32),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
