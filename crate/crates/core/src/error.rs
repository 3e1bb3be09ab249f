use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular (det = 0)")]
    SingularMatrix,
    #[error("matrix is not unimodular: det = {det}")]
    NotUnimodular { det: String },
    #[error("matrix violates the {group} constraints: {detail}")]
    NotInGroup { group: &'static str, detail: String },
    #[error("invalid lattice dimensions: {0}")]
    InvalidDims(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("configuration does not match lattice: {0}")]
    LatticeMismatch(String),
    #[error("linear correction system stayed rank deficient after {attempts} attempts")]
    SolveFailed { attempts: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("tuple is not in the closure of the torus stratum: {0}")]
    NotInClosure(String),
    #[error("value not representable in the exact backend: {0}")]
    NotRepresentable(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("index error: {0}")]
    Index(String),
    #[error("radical violation: nonzero f with f^2 in the ideal, f = {counterexample}")]
    RadicalViolation { counterexample: String },
    #[error("proof-path mismatch at {index}: expected {expected}, got {actual}")]
    ProofPathMismatch {
        index: String,
        expected: String,
        actual: String,
    },
    #[error("malformed input at {location}: {message}")]
    Format { location: String, message: String },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularMatrix => "SingularMatrix",
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::NotInGroup { .. } => "NotInGroup",
            Error::InvalidDims(_) => "InvalidDims",
            Error::InvalidLattice(_) => "InvalidLattice",
            Error::LatticeMismatch(_) => "LatticeMismatch",
            Error::SolveFailed { .. } => "SolveFailed",
            Error::InvalidParams(_) => "InvalidParams",
            Error::NotInClosure(_) => "NotInClosure",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::Syntax { .. } => "SyntaxError",
            Error::Index(_) => "IndexError",
            Error::RadicalViolation { .. } => "RadicalViolation",
            Error::ProofPathMismatch { .. } => "ProofPathMismatch",
            Error::Format { .. } => "FormatError",
        }
    }

    /// Position of the offending input, when the error has one.
    pub fn location(&self) -> Option<String> {
        match self {
            Error::Syntax { offset, .. } => Some(format!("offset {offset}")),
            Error::Format { location, .. } => Some(location.clone()),
            _ => None,
        }
    }

    /// True for malformed-input errors, false for domain failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::Format { .. } | Error::Index(_) | Error::InvalidDims(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
