use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::constructions::FeasibilityReport;
use crate::monomial::SquarefreeMonomial;
use crate::stable::ExchangeWitness;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition of an operation does not hold.
    Contract(String),
    /// Monomials of different degrees were mixed where one degree is required.
    DegreeMismatch { expected: usize, found: usize },
    /// Monomials over different ambient rings were mixed.
    AmbientMismatch { expected: usize, found: usize },
    /// A variable index outside `1..=n`.
    IndexOutOfRange { index: usize, n: usize },
    /// The same variable appears twice.
    NotSquarefree { index: usize },
    /// The ideal is not squarefree stable; the witness is the failing exchange.
    NotStable(ExchangeWitness),
    /// `min BShad` ran out of variables: the restricted shadow is empty.
    EmptyRestrictedShadow { u: SquarefreeMonomial, k: usize, l: usize },
    /// The corner data cannot be realized; `corner` is 1-based.
    Infeasible {
        corner: usize,
        reason: String,
        report: Option<Box<FeasibilityReport>>,
    },
    /// Two independent computations of the same quantity disagree.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::AmbientMismatch { expected, found } => {
                write!(f, "ambient mismatch: expected n = {expected}, found n = {found}")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "variable index {index} outside 1..={n}")
            }
            Error::NotSquarefree { index } => {
                write!(f, "not squarefree: x{index} appears more than once")
            }
            Error::NotStable(w) => write!(f, "ideal is not squarefree stable: {w}"),
            Error::EmptyRestrictedShadow { u, k, l } => {
                write!(f, "no monomial: restricted shadow of {u} at ({k}, {l}) is empty")
            }
            Error::Infeasible { corner, reason, .. } => {
                write!(f, "infeasible at corner {corner}: {reason}")
            }
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
