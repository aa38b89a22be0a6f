//! The rational-function field Q(T).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};
use super::poly::{gcd, Polynomial};
use super::AlgebraError;

type TPoly = Polynomial<Rational>;

/// An element `num / den` of Q(T).
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: TPoly,
    den: TPoly,
}

impl RationalFunction {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(TPoly::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc_inv = den.leading_coeff().and_then(Field::inv).expect("nonzero");
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn from_poly(num: TPoly) -> Self {
        RationalFunction {
            num,
            den: TPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    /// The transcendental `T`.
    pub fn t() -> Self {
        Self::from_poly(TPoly::x())
    }

    /// `T^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(TPoly::monomial(<Rational as Field>::one(), k as usize))
        } else {
            RationalFunction {
                num: TPoly::one(),
                den: TPoly::monomial(<Rational as Field>::one(), k.unsigned_abs() as usize),
            }
        }
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// T-adic valuation `ord_T(num) - ord_T(den)`; `None` stands for `+∞` (the zero element).
    pub fn t_adic_valuation(&self) -> Option<i64> {
        let ord = |p: &TPoly| p.coeffs().iter().position(|c| !c.is_zero());
        let n = ord(&self.num)?;
        let d = ord(&self.den).expect("denominator is nonzero");
        Some(n as i64 - d as i64)
    }
}

/// T-adic valuation of a nonzero rational function.
pub fn t_adic_valuation(r: &RationalFunction) -> Result<i64, AlgebraError> {
    r.t_adic_valuation().ok_or(AlgebraError::ValuationOfZero)
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(TPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_poly(TPoly::constant(Rational::from_i64(v)))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let lc_inv = self.num.leading_coeff().and_then(Field::inv)?;
        Some(RationalFunction {
            num: self.den.scale(&lc_inv),
            den: self.num.scale(&lc_inv),
        })
    }

    fn needs_parens(&self) -> bool {
        !(self.num.is_constant() && self.den.is_constant())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compound = |p: &TPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.den.is_constant() {
            return write!(f, "{}", self.num.display_in("T"));
        }
        if compound(&self.num) {
            write!(f, "({})", self.num.display_in("T"))?;
        } else {
            write!(f, "{}", self.num.display_in("T"))?;
        }
        if compound(&self.den) {
            write!(f, "/({})", self.den.display_in("T"))
        } else {
            write!(f, "/{}", self.den.display_in("T"))
        }
    }
}

impl Add<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_constant() {
                return Self::from_poly(num);
            }
            return Self::normalized(num, self.den);
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return Self::from_poly(&self.num + &rhs.num);
        }
        let g = gcd(&self.den, &rhs.den);
        let a = rhs.den.exact_div(&g).expect("gcd divides");
        let b = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        let den = &self.den * &a;
        Self::normalized(num, den)
    }
}

impl Sub<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Mul<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying so the product is already reduced
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc_inv = den.leading_coeff().and_then(Field::inv).expect("nonzero");
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        self * &rhs
    }
}
