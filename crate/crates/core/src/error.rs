use thiserror::Error;

/// Errors raised by the exact-arithmetic and representation-theoretic kernels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("root order {k} does not divide conductor {n}")]
    RootOrder { k: u32, n: u32 },

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("not a Young diagram: {0}")]
    NotYoungDiagram(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("size cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not an idempotent: {0}")]
    NotIdempotent(String),

    #[error("non-integral multiplicity {0}")]
    NonIntegralMultiplicity(String),

    #[error("cache i/o: {0}")]
    Cache(String),
}

impl Error {
    /// Short machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RootOrder { .. } => "root_order",
            Error::NotRational(_) => "not_rational",
            Error::NotYoungDiagram(_) => "not_young_diagram",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidInput(_) => "invalid_input",
            Error::NotIdempotent(_) => "not_idempotent",
            Error::NonIntegralMultiplicity(_) => "non_integral_multiplicity",
            Error::Cache(_) => "cache",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
