use thiserror::Error;

/// Errors raised by the invariant engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidArgument(String),

    #[error("inexact division: nonzero remainder")]
    InexactDivision,

    #[error("{0}")]
    Parse(String),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("strand mismatch: braid has {braid} strands, vector lives on {space}")]
    StrandMismatch { braid: usize, space: usize },

    #[error("composition {0} is not in the expected weight space")]
    WrongAmbientSpace(String),

    #[error("variable mismatch: expected ring {expected}, found {found}")]
    VariableMismatch { expected: String, found: String },

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("too many crossings for the state sum: {0} > {max}", max = crate::oracles::MAX_STATE_SUM_CROSSINGS)]
    TooManyCrossings(usize),

    #[error("not in image of gamma: monomial {0}")]
    NotInImageOfGamma(String),

    #[error("knot '{0}' not found in table")]
    UnknownKnot(String),
}

impl Error {
    /// Errors caused by bad user input, as opposed to broken internal
    /// consistency checks.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::InexactDivision | Error::NotInImageOfGamma(_))
    }

    /// Short stable tag used in machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InexactDivision => "inexact-division",
            Error::Parse(_) => "parse",
            Error::GeneratorOutOfRange { .. } => "generator-out-of-range",
            Error::StrandMismatch { .. } => "strand-mismatch",
            Error::WrongAmbientSpace(_) => "wrong-ambient-space",
            Error::VariableMismatch { .. } => "variable-mismatch",
            Error::NotAKnot { .. } => "not-a-knot",
            Error::TooManyCrossings(_) => "too-many-crossings",
            Error::NotInImageOfGamma(_) => "not-in-image-of-gamma",
            Error::UnknownKnot(_) => "unknown-knot",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
