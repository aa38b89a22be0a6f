//! The Jacobian of a real hyperelliptic curve `z² + h z − f = 0` in Mumford form.
//!
//! Elements are reduced triples `([P, Q], d)`; see [`MumfordDivisor`] for the
//! divisor each one denotes. Addition is composition followed by reduction.

mod curve;
mod divisor;
mod law;
mod special;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::toda::TodaError;

pub use curve::{Branch, HyperellipticCurve, StandardFormCurve};
pub use divisor::{validate_membership, MembershipViolation, MumfordDivisor};
pub use law::{add, compose, neg, reduce, scalar_mul, sub, Composition};
pub use special::{
    divisor_d, divisor_d_on, divisor_d_tilde, eigenvector_map, eigenvector_map_on, equal_mod_cn,
    predicted_after, to_standard_form, torsion_generator,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobianError {
    #[error("divisors live on different curves")]
    CurveMismatch,
    #[error("invalid curve model: {0}")]
    BadModel(String),
    #[error("not a reduced divisor: {0}")]
    Membership(#[from] MembershipViolation),
    #[error("s² does not divide P₁P₂")]
    CompositionNotExact,
    #[error("reduction failed: {0}")]
    ReductionFailed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Toda(#[from] TodaError),
}
