use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Field, Polynomial};

use super::curve::HyperellipticCurve;
use super::JacobianError;

/// A Jacobian element `([P, Q], d)`.
///
/// It stands for the class of `div(P, z − Q) − (d/2)·∞₋ − (deg P − d/2)·∞₊`, where
/// `div(P, z − Q)` is the effective divisor of the points `(x, Q(x))` with `P(x) = 0`.
/// The neutral element is `([1, 0], 0)` and `([1, 0], 2)` is the class `∞₊ − ∞₋`.
///
/// Reduced form: `P` monic with `deg P ≤ g`, `deg Q < deg P`, `P | Q² + hQ − f`,
/// `d` even, and `d/2` inside the window returned by [`weight_window`](Self::weight_window).
/// Every class has exactly one reduced representative, so structural equality is
/// equality in the Jacobian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MumfordDivisor<F: Field> {
    p: Polynomial<F>,
    q: Polynomial<F>,
    d: i64,
    curve: Arc<HyperellipticCurve<F>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum MembershipViolation {
    #[error("P is not monic")]
    NotMonic,
    #[error("deg P = {deg} exceeds the genus {genus}")]
    DegreeTooLarge { deg: usize, genus: usize },
    #[error("Q is not reduced modulo P")]
    QNotReduced,
    #[error("P does not divide Q² + hQ − f")]
    NotDivisible,
    #[error("d = {d} is odd")]
    OddWeight { d: i64 },
    #[error("d = {d} lies outside [{lo}, {hi}]")]
    WeightOutsideWindow { d: i64, lo: i64, hi: i64 },
}

impl MembershipViolation {
    pub fn code(&self) -> &'static str {
        match self {
            MembershipViolation::NotMonic => "not_monic",
            MembershipViolation::DegreeTooLarge { .. } => "degree_too_large",
            MembershipViolation::QNotReduced => "q_not_reduced",
            MembershipViolation::NotDivisible => "not_divisible",
            MembershipViolation::OddWeight { .. } => "odd_weight",
            MembershipViolation::WeightOutsideWindow { .. } => "weight_outside_window",
        }
    }
}

impl<F: Field> MumfordDivisor<F> {
    /// Validate and wrap. `Q` is first reduced modulo `P`.
    pub fn new(
        p: Polynomial<F>,
        q: Polynomial<F>,
        d: i64,
        curve: Arc<HyperellipticCurve<F>>,
    ) -> Result<Self, JacobianError> {
        if p.is_zero() {
            return Err(JacobianError::Membership(MembershipViolation::NotMonic));
        }
        let q = q.rem(&p)?;
        let e = MumfordDivisor { p, q, d, curve };
        validate_membership(&e)?;
        Ok(e)
    }

    pub(crate) fn from_parts(
        p: Polynomial<F>,
        q: Polynomial<F>,
        weight: i64,
        curve: Arc<HyperellipticCurve<F>>,
    ) -> Self {
        MumfordDivisor {
            p,
            q,
            d: 2 * weight,
            curve,
        }
    }

    pub fn zero(curve: Arc<HyperellipticCurve<F>>) -> Self {
        Self::from_parts(Polynomial::one(), Polynomial::zero(), 0, curve)
    }

    pub fn p(&self) -> &Polynomial<F> {
        &self.p
    }

    pub fn q(&self) -> &Polynomial<F> {
        &self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn curve(&self) -> &Arc<HyperellipticCurve<F>> {
        &self.curve
    }

    pub fn is_zero(&self) -> bool {
        self.p.degree() == Some(0) && self.d == 0
    }

    /// Equality of the polynomial pair `[P, Q]` alone, ignoring `d`.
    pub fn same_pair(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }

    /// Admissible `d` values for a reduced divisor with this `deg P`.
    pub fn weight_window(&self) -> (i64, i64) {
        let (lo, hi) = self.curve.weight_window(self.p.degree().unwrap_or(0));
        (2 * lo, 2 * hi)
    }
}

impl<F: Field> fmt::Display for MumfordDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}, {}], {})", self.p, self.q, self.d)
    }
}

/// Check the reduced-form conditions, reporting the first one that fails.
pub fn validate_membership<F: Field>(e: &MumfordDivisor<F>) -> Result<(), MembershipViolation> {
    if !e.p.is_monic() {
        return Err(MembershipViolation::NotMonic);
    }
    let deg = e.p.degree().expect("monic is nonzero");
    let genus = e.curve.genus();
    if deg > genus {
        return Err(MembershipViolation::DegreeTooLarge { deg, genus });
    }
    if e.q.degree_i64() >= deg as i64 {
        return Err(MembershipViolation::QNotReduced);
    }
    let norm = e.curve.norm(&e.q);
    if !norm.rem(&e.p).expect("P is nonzero").is_zero() {
        return Err(MembershipViolation::NotDivisible);
    }
    if e.d % 2 != 0 {
        return Err(MembershipViolation::OddWeight { d: e.d });
    }
    let (lo, hi) = e.weight_window();
    if e.d < lo || e.d > hi {
        return Err(MembershipViolation::WeightOutsideWindow { d: e.d, lo, hi });
    }
    Ok(())
}
