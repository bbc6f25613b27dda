use thiserror::Error;

use crate::scalar::Field;
use crate::verdict::DefectReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("missing structure map: {0}")]
    Missing(&'static str),

    #[error("scalar {0} is not invertible")]
    NotInvertible(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        defect: Option<Box<DefectReport>>,
    },

    #[error("postcondition violated: {what}")]
    Postcondition {
        what: String,
        defect: Option<Box<DefectReport>>,
    },

    #[error("search budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, defect: Option<DefectReport>) -> Self {
        Error::Precondition {
            what: what.into(),
            defect: defect.map(Box::new),
        }
    }

    pub(crate) fn postcondition(what: impl Into<String>, defect: Option<DefectReport>) -> Self {
        Error::Postcondition {
            what: what.into(),
            defect: defect.map(Box::new),
        }
    }
}
