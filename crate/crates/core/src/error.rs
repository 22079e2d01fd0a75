use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("vertex `{0}` appears in both join operands")]
    LabelCollision(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<String>),
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("clique of dimension {found} exceeds the dimension cap {cap}")]
    DimensionCapExceeded { cap: usize, found: usize },
    #[error("complex is not pure of dimension {0}")]
    NotPure(isize),
    #[error("vertex `{vertex}` is neither interior nor boundary: local homology {local}")]
    NotRelativeManifold { vertex: String, local: String },
    #[error("Coxeter system is reducible")]
    Reducible,
    #[error("Coxeter group is finite")]
    FiniteGroup,
    #[error("need at least {required} vertices, got {found}")]
    TooFewVertices { required: usize, found: usize },
    #[error("reconstruction needs dimension n >= 1, got {0}")]
    InvalidDimension(usize),
    #[error("graph enumeration supports 1..=7 vertices, got {0}")]
    EnumerationRange(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
