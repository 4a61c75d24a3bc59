//! Shared error type for the crate.
//!
//! Contract violations that indicate caller bugs (mixed field contexts,
//! division by an exactly-zero scalar inside polynomial algorithms) panic;
//! everything that depends on runtime input is reported through [`Error`].

use std::fmt;

/// Errors produced by constructors and the exact-arithmetic algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Denominator zero when building a rational number.
    ZeroDenominator,
    /// A rational cannot be reduced mod p because p divides its denominator.
    BadReduction { denominator: String, modulus: u64 },
    /// Requested prime-field characteristic is not a prime greater than 3.
    BadCharacteristic(u64),
    /// The characteristic divides a quantity the computation needs invertible.
    CharDivides { modulus: u64, value: u64, what: &'static str },
    /// An argument was outside the range an operation supports.
    OutOfRange { what: &'static str, value: i64, requirement: &'static str },
    /// A polynomial argument was identically zero where a nonzero one is required.
    ZeroPolynomial(&'static str),
    /// Multiplicity structure is not recoverable by gcd descent in this
    /// characteristic (some multiplicity is at least p).
    InseparableProfile { modulus: u64 },
    /// A quantity that must come out integral did not.
    NonIntegral { what: &'static str, value: String },
    /// A linear system or table entry the computation relies on is singular.
    DegenerateSystem(&'static str),
    /// A computation reached a structurally degenerate configuration.
    Degenerate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::BadReduction { denominator, modulus } => write!(
                f,
                "cannot reduce mod {modulus}: denominator {denominator} vanishes in F_{modulus}"
            ),
            Error::BadCharacteristic(p) => {
                write!(f, "characteristic {p} is not a prime greater than 3")
            }
            Error::CharDivides { modulus, value, what } => {
                write!(f, "characteristic {modulus} divides {what} {value}")
            }
            Error::OutOfRange { what, value, requirement } => {
                write!(f, "{what} = {value} out of range: requires {requirement}")
            }
            Error::ZeroPolynomial(op) => write!(f, "{op}: zero polynomial not allowed"),
            Error::InseparableProfile { modulus } => write!(
                f,
                "multiplicity profile not recoverable in characteristic {modulus}: \
                 some multiplicity is >= {modulus}"
            ),
            Error::NonIntegral { what, value } => {
                write!(f, "{what} = {value} is not an integer")
            }
            Error::DegenerateSystem(what) => write!(f, "degenerate linear system in {what}"),
            Error::Degenerate(msg) => write!(f, "degenerate configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
