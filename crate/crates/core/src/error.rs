use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("format violation: {0}")]
    Format(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("symplectic matrices need an even number of columns, got {0}")]
    OddColumns(usize),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("matrix is not a symplectomorphism")]
    NotSymplectic,

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("index {index} out of range for {len} qubits")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("generators do not commute: rows {0} and {1}")]
    NonCommuting(usize, usize),

    #[error("generators are not independent")]
    DependentGenerators,

    #[error("generator {0} is not Hermitian (squares to -I)")]
    NonHermitian(usize),

    #[error("projector annihilates every seed state")]
    EmptyEigenspace,

    #[error("{needed} qubits exceed the simulation limit of {limit}")]
    TooManyQubits { needed: usize, limit: usize },

    #[error("state is not an eigenstate of stabilizer {row} (expectation {expectation:.3})")]
    NotStabilizerEigenstate { row: usize, expectation: f64 },

    #[error("decoding failure: {0}")]
    DecodingFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
