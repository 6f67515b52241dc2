use alloc::string::String;
use core::fmt;

use crate::shapes::Cell;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parts are not weakly decreasing; `index` is 1-based.
    NotDecreasing { index: usize },
    /// A zero part appeared before a positive one; `index` is 1-based.
    ZeroPart { index: usize },
    /// `inner[index] > outer[index]` (1-based), or inner is longer.
    InnerNotContained { index: usize },
    /// Text could not be parsed; `position` is a byte offset.
    Parse { position: usize, message: String },
    CellOutside(Cell),
    /// A parameter is outside the domain of an operation.
    Domain(String),
    CapExceeded {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// Quadrature refinement did not settle.
    Numeric(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDecreasing { index } => {
                write!(f, "parts not weakly decreasing at index {index}")
            }
            Error::ZeroPart { index } => write!(f, "zero part at index {index}"),
            Error::InnerNotContained { index } => {
                write!(f, "inner partition not contained in outer at index {index}")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::CellOutside(c) => write!(f, "cell ({}, {}) lies outside the shape", c.row, c.col),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::CapExceeded {
                what,
                limit,
                requested,
            } => write!(f, "{what} cap exceeded: {requested} > {limit}"),
            Error::Numeric(msg) => write!(f, "numeric error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by a resource cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
