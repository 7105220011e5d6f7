use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("finite field required: {0}")]
    FiniteFieldRequired(&'static str),

    #[error("character search undecidable here: no registered characters for an algebra over Q")]
    CharactersUnavailable,

    #[error("search budget exceeded in {what}: needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("validation failed for {what}: {report}")]
    Invalid {
        what: &'static str,
        report: ValidationReport,
    },

    #[error("not an algebra morphism: {0}")]
    NotAMorphism(String),

    #[error("not a section: {0}")]
    NotASection(String),

    #[error("the automorphism list is empty; it must contain at least the identity")]
    EmptyAutomorphisms,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, report: ValidationReport) -> Self {
        Error::Invalid { what, report }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
