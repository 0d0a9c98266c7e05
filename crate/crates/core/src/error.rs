use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Some part of the inner partition exceeds the outer one.
    Containment { row: usize, mu: u32, lambda: u32 },
    /// A malformed partition (parts not weakly decreasing).
    Partition(String),
    /// Invalid strip parameters.
    Spec(String),
    /// The shape does not have the structure an operation requires.
    Shape(String),
    /// The exponential-time path would exceed its guard.
    BudgetExceeded { what: &'static str, estimate: usize, limit: usize },
    /// More results than the caller allowed.
    LimitExceeded { limit: usize },
    /// A closed form produced a non-integral or negative count.
    Integrality(String),
    /// A diagonal cut is not interleaved by its neighbours.
    Sandwich { diagonal: i64 },
    /// Numerical operator requested for a strip that is too thick.
    CostGuard { k: usize },
    /// Argument outside the domain of a sequence or formula.
    Domain(String),
    /// Unknown named object (series, sequence, suite).
    UnknownName(String),
    /// Division by a series or matrix that is not invertible.
    NotInvertible(String),
    /// Text that does not follow the shape grammar.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Containment { row, mu, lambda } => write!(
                f,
                "ContainmentError: mu[{row}] = {mu} exceeds lambda[{row}] = {lambda}"
            ),
            Error::Partition(msg) => write!(f, "PartitionError: {msg}"),
            Error::Spec(msg) => write!(f, "SpecError: {msg}"),
            Error::Shape(msg) => write!(f, "ShapeError: {msg}"),
            Error::BudgetExceeded { what, estimate, limit } => write!(
                f,
                "BudgetExceeded: {what} needs at least {estimate}, limit is {limit}"
            ),
            Error::LimitExceeded { limit } => {
                write!(f, "LimitExceeded: more than {limit} results")
            }
            Error::Integrality(msg) => write!(f, "IntegralityError: {msg}"),
            Error::Sandwich { diagonal } => write!(
                f,
                "SandwichError: diagonal {diagonal} is not interleaved by its neighbours"
            ),
            Error::CostGuard { k } => write!(
                f,
                "CostGuard: numerical transfer operators are limited to k <= 3, got k = {k}"
            ),
            Error::Domain(msg) => write!(f, "DomainError: {msg}"),
            Error::UnknownName(name) => write!(f, "unknown name `{name}`"),
            Error::NotInvertible(msg) => write!(f, "NotInvertible: {msg}"),
            Error::Parse(msg) => write!(f, "ParseError: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
