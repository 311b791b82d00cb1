use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} out of range (1..={max})")]
    DimOutOfRange { dim: usize, max: usize },

    #[error("coordinate {coord} out of range for dimension {dim}")]
    CoordOutOfRange { coord: usize, dim: usize },

    #[error("bits set at coordinates >= dimension {dim}")]
    StrayBits { dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix needs at least one row")]
    EmptyMatrix,

    #[error("invalid form data: {reason}")]
    InvalidForm { reason: String },

    #[error("form is degenerate: radical has dimension {radical_dim}")]
    Degenerate { radical_dim: usize },

    #[error("{what} limited to {limit}, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("rank parameter {r} out of range (1..={max})")]
    RankOutOfRange { r: usize, max: usize },

    #[error("map is singular, not an isometry candidate")]
    SingularMap,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{check} check failed: {witness}")]
    CheckFailed {
        check: &'static str,
        witness: String,
    },

    #[error("connection set invalid: {reason}")]
    ConnectionSet { reason: String },

    #[error("generator index {index} out of range for 2r = {count}")]
    GeneratorIndex { index: usize, count: usize },

    #[error("generator indices must be distinct")]
    DistinctIndicesRequired,

    #[error("group was not built from the all-commuting involution generators")]
    WrongGroupFlavor,

    #[error("graph carries no {expected} labels")]
    MissingLabels { expected: &'static str },

    #[error("not a cycle: {reason}")]
    NotACycle { reason: String },

    #[error("fiber list is not a partition of the vertex set: {reason}")]
    NotAPartition { reason: String },

    #[error("graph is not {property}")]
    GraphShape { property: &'static str },

    #[error("permutation invalid: {reason}")]
    BadPermutation { reason: String },

    #[error("element does not fix the neighborhood of the base vertex pointwise")]
    NotLocallyTrivial,

    #[error("failed to parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },
}
