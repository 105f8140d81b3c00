use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Scalar-valued payloads are rendered to strings so the error type stays
/// independent of the scalar the caller computes with.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("matrix does not square to zero")]
    NotSquareZero,

    #[error("nonsplit spectrum of {context}: factor {factor} has no rational root")]
    NonsplitSpectrum { context: String, factor: String },

    /// `row` and `col` are 0-based; the message shows them 1-based.
    #[error("relation violated: {relation} (entry ({}, {}) = {value})", .row + 1, .col + 1)]
    RelationViolated {
        relation: String,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("dimension unsupported: {0}")]
    DimensionUnsupported(String),

    #[error("parameter constraint violated: {0}")]
    Constraint(String),

    #[error("closure violated: {0}")]
    ClosureViolated(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("canonical form could not be certified: {0}")]
    Canonicalization(String),
}

impl Error {
    /// Stable short name used by front ends for exit diagnostics.
    pub fn name(&self) -> String {
        match self {
            Error::NonSquare { .. } => "non-square matrix".into(),
            Error::SizeMismatch(_) => "size mismatch".into(),
            Error::NotSquareZero => "not square-zero".into(),
            Error::NonsplitSpectrum { context, .. } => format!("nonsplit spectrum of {context}"),
            Error::RelationViolated { .. } => "relation violated".into(),
            Error::DimensionUnsupported(_) => "dimension unsupported".into(),
            Error::Constraint(_) => "constraint violation".into(),
            Error::ClosureViolated(_) => "closure violated".into(),
            Error::Parse(_) => "parse error".into(),
            Error::Canonicalization(_) => "canonicalization failed".into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
