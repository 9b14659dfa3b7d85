use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Coxeter type `{0}` (supported families: A, B, D, G2, F4)")]
    UnsupportedType(String),

    #[error("invalid group symbol `{0}`")]
    InvalidSymbol(String),

    #[error("{what} has size {size}, which exceeds the cap of {cap}")]
    SizeCap { what: &'static str, size: u128, cap: u128 },

    #[error("reflection set {0} is not parabolically closed")]
    NotParabolic(String),

    #[error("subset is not an order ideal of the right weak order")]
    NotIdeal,

    #[error("vector is orthogonal to the ray {0}")]
    NonGeneric(String),

    #[error("shelling condition fails at facet {position}")]
    ShellingViolation { position: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
