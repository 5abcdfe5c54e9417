use thiserror::Error;

use crate::kernel::{Poly, Variable};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("resource budget of {limit} reduction steps exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("no binding for variable {0}")]
    MissingBinding(Variable),
    #[error("variable {0} is not in the ambient space")]
    NotInAmbient(Variable),
    #[error("unknown parameter {0}")]
    UnknownParameter(String),
    #[error("{0} is already declared")]
    Redeclared(String),
    #[error("no inverse σ-image declared for parameter {0}")]
    NoInverse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the unit ideal defines the empty variety")]
    UnitIdeal,
    #[error("point is not on the variety: generator {0} does not vanish")]
    PointNotOnVariety(Poly),
    #[error("operator is undefined on variable {0}")]
    UnsupportedVariable(Variable),
    #[error("rewrite rule is not σ-decreasing: {0}")]
    InvalidRule(String),
    #[error("level {requested} exceeds available level {available}")]
    LevelOutOfRange { requested: u32, available: u32 },
    #[error("invalid sequence at index {index}: {reason}")]
    InvalidSequence { index: usize, reason: String },
    #[error("ordinal {beta} is not below {bound}")]
    OrdinalOutOfRange { beta: String, bound: String },
    #[error("factor is zero")]
    ZeroFactor,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
