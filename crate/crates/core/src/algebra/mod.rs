//! Exact scalar and polynomial arithmetic: Q, Q(T), dense polynomials over either,
//! and Laurent polynomials in the spectral parameter.

pub mod encoding;
pub mod field;
pub mod laurent;
pub mod poly;
pub mod ratfunc;

pub use encoding::{FieldScalar, FieldTag, JsonScalar};
pub use field::{rat, Field, Rational};
pub use laurent::{laurent_det, BivariateLaurent, LaurentMatrix};
pub use poly::{gcd, poly_divrem, xgcd2, xgcd3, Bezout2, Bezout3, Polynomial};
pub use ratfunc::{t_adic_valuation, RationalFunction};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division was required to be exact but left a remainder")]
    InexactDivision,
    #[error("gcd of all-zero inputs is undefined")]
    GcdOfZeros,
    #[error("T-adic valuation of zero")]
    ValuationOfZero,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix of size {0} is beyond the cofactor-expansion oracle")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("unknown field {0:?} (expected \"Q\" or \"Q(T)\")")]
    UnknownField(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldTag, found: FieldTag },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
