use thiserror::Error;

/// Errors raised by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: String, found: String },

    #[error("element {element} is not in the carrier of {monoid}")]
    NotInCarrier { monoid: String, element: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("empty homset: inputs {inputs} cannot be assembled into {output}")]
    EmptyHomset { inputs: String, output: String },

    #[error("profile mismatch at slot {slot}: expected type {expected}, found {found}")]
    ProfileMismatch {
        slot: usize,
        expected: String,
        found: String,
    },

    #[error("model mismatch: expected {expected}, found {found}")]
    ModelMismatch { expected: String, found: String },

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("enumeration needs {needed} elements but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("unknown identifier: {0}")]
    Unknown(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("type error at {path}: {message}")]
    Type { path: String, message: String },

    #[error("at {path}: {source}")]
    At { path: String, source: Box<Error> },

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// Attaches the location of the offending subterm.
    pub fn at(self, path: impl Into<String>) -> Error {
        match self {
            Error::At { .. } | Error::Type { .. } | Error::Parse { .. } => self,
            e => Error::At {
                path: path.into(),
                source: Box::new(e),
            },
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
