use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidSpec(String),

    #[error("group axiom validation failed: {0}")]
    AxiomViolation(String),

    #[error("cannot parse group spec {input:?}: {reason}")]
    BadGroupSpec { input: String, reason: String },

    #[error("cannot parse element {label:?}: {reason}")]
    BadElementLabel { label: String, reason: String },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: u32, order: u32 },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("input set is not avoidable")]
    NotAvoidable,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
