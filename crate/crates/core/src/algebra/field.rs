//! The exact-field abstraction every polynomial and matrix routine is written against.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational numbers, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// An exact field of characteristic zero with decidable equality.
///
/// Equality must be structural equality of canonical forms, so every implementor
/// keeps its values normalized after each operation.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// Coefficients of the product of two nonempty coefficient vectors.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y;
            }
        }
        out
    }

    /// `self^k` for a non-negative exponent.
    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }

    /// Whether the value is a "compound" expression that needs parentheses when
    /// printed as a polynomial coefficient.
    fn needs_parens(&self) -> bool {
        false
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn needs_parens(&self) -> bool {
        !self.is_integer()
    }

    /// Multiplies over a common denominator so each output coefficient is reduced once.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (na, da) = over_common_denominator(a);
        let (nb, db) = over_common_denominator(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let den = da * db;
        out.into_iter()
            .map(|n| BigRational::new(n, den.clone()))
            .collect()
    }
}

fn over_common_denominator(xs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = xs.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (nums, den)
}

/// Shorthand for `p/q` as a [`Rational`]; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
