use thiserror::Error;

/// Errors shared across the library. Every fallible operation returns
/// [`Result`]; panics are reserved for internal invariant violations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("duplicate vertex label {label:?}")]
    DuplicateLabel { label: String },

    #[error("unknown vertex label {label:?}")]
    UnknownLabel { label: String },

    #[error("self-loop at vertex {label:?}")]
    SelfLoop { label: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{modulus} is not prime")]
    NotPrime { modulus: u32 },

    #[error("invalid field spec {spec:?} (expected \"q\" or \"gf:P\")")]
    BadFieldSpec { spec: String },

    #[error("set {mask:#x} is not a face of the complex")]
    NotAFace { mask: u32 },

    #[error("set is not independent in the graph")]
    NotIndependent,

    #[error("set is not a maximal independent set of the graph")]
    NotMaximalIndependent,

    #[error("set is not a vertex cover of the graph")]
    NotVertexCover,

    #[error("apex label {label:?} already names a vertex")]
    ApexLabelClash { label: String },

    #[error("complex has {count} faces, limit is {limit}")]
    FaceLimitExceeded { count: usize, limit: usize },

    #[error("matching is not a partial matching: face {mask:#x} paired twice")]
    NotAMatching { mask: u32 },

    #[error("matched pair ({low:#x}, {high:#x}) is not a codimension-1 face relation")]
    BadMatchedPair { low: u32, high: u32 },

    #[error("matching has a directed cycle among faces of dimension {dim}")]
    MatchingCycle { dim: i32 },

    #[error("polynomial division by {divisor} leaves remainder")]
    InexactDivision { divisor: String },

    #[error("zero polynomial has no root multiplicity")]
    ZeroPolynomial,

    #[error("unknown theorem id {id:?}")]
    UnknownTheorem { id: String },

    #[error("empty range: {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },

    #[error("graph family {family:?} needs n >= {min}, got {n}")]
    FamilyRange { family: String, min: usize, n: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
