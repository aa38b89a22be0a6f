//! Dense univariate polynomials over an exact [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::AlgebraError;

/// A dense univariate polynomial.
///
/// Coefficients are stored in ascending degree, `coeffs[i]` multiplying `x^i`.
/// The leading coefficient is never zero; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Build from small integer coefficients, ascending degree.
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (which sits below every constant).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`, handy for bound arithmetic.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(F::is_one)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Divide by the leading coefficient. `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading_coeff()?;
        if lc.is_one() {
            return Some(self.clone());
        }
        let inv = lc.inv()?;
        Some(self.scale(&inv))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Value at zero, i.e. the constant coefficient.
    pub fn at_zero(&self) -> F {
        self.coeff(0)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let d = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[d]
            .inv()
            .ok_or(AlgebraError::DivisionByZero)?;
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = rem[k + d].clone();
            if c.is_zero() {
                continue;
            }
            let q = c * &lc_inv;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * dc;
            }
            quot[k] = q;
        }
        rem.truncate(d);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        if self.degree() < divisor.degree() && !divisor.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of a division that is required to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool, AlgebraError> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Render with a chosen variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, var }
    }
}

pub struct PolyDisplay<'a, F: Field> {
    poly: &'a Polynomial<F>,
    var: &'a str,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else if c.needs_parens() {
                write!(f, "({c})*{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

fn add_coeffs<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.clone() + s;
    }
    out
}

impl<F: Field> Add<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        Polynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl<F: Field> Sub<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), F::zero());
        }
        for (o, r) in out.iter_mut().zip(&rhs.coeffs) {
            *o = o.clone() - r;
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Mul<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(F::convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$m(rhs)
            }
        }
        impl<F: Field> $tr<Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// `a = quotient * b + remainder` with `deg remainder < deg b`.
pub fn poly_divrem<F: Field>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>), AlgebraError> {
    a.div_rem(b)
}

/// Extended Euclid that tolerates two zero inputs (returning all zeros).
fn xgcd_raw<F: Field>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> (Polynomial<F>, Polynomial<F>, Polynomial<F>) {
    // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    let (mut r0, mut s0, mut t0) = (a.clone(), Polynomial::one(), Polynomial::zero());
    let (mut r1, mut s1, mut t1) = (b.clone(), Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        // keeping each remainder monic limits coefficient growth over Q
        let inv = r1
            .leading_coeff()
            .and_then(F::inv)
            .expect("nonzero remainder");
        (r1, s1, t1) = (r1.scale(&inv), s1.scale(&inv), t1.scale(&inv));
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.leading_coeff().and_then(F::inv) {
        Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
        None => (Polynomial::zero(), Polynomial::zero(), Polynomial::zero()),
    }
}

/// `(g, c1, c2)` with `g = c1*a + c2*b`.
pub type Bezout2<F> = (Polynomial<F>, Polynomial<F>, Polynomial<F>);

/// `(s, f1, f2, f3)` with `s = f1*a + f2*b + f3*c`.
pub type Bezout3<F> = (Polynomial<F>, Polynomial<F>, Polynomial<F>, Polynomial<F>);

/// Monic gcd `g` with cofactors: `g = c1*a + c2*b`.
pub fn xgcd2<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Bezout2<F>, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::GcdOfZeros);
    }
    Ok(xgcd_raw(a, b))
}

/// Monic gcd of three polynomials with Bézout cofactors: `s = f1*a + f2*b + f3*c`.
pub fn xgcd3<F: Field>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
    c: &Polynomial<F>,
) -> Result<Bezout3<F>, AlgebraError> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(AlgebraError::GcdOfZeros);
    }
    let (g1, a1, b1) = xgcd_raw(a, b);
    let (s, e1, e3) = xgcd_raw(&g1, c);
    Ok((s, &e1 * &a1, &e1 * &b1, e3))
}

/// Monic gcd, zero only when both inputs are zero.
pub fn gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    if a.is_zero() {
        return b.monic().unwrap_or_else(Polynomial::zero);
    }
    if b.is_zero() {
        return a.monic().unwrap_or_else(Polynomial::zero);
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let (mut r0, mut r1) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !r1.is_zero() {
        let r = r0.rem(&r1).expect("nonzero divisor");
        r0 = r1;
        r1 = r.monic().unwrap_or_else(Polynomial::zero);
    }
    r0.monic().unwrap_or_else(Polynomial::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, Rational};

    type P = Polynomial<Rational>;

    fn p(cs: &[i64]) -> P {
        P::from_i64s(cs)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(P::zero().degree(), None);
        assert!(P::zero().degree() < P::one().degree());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = poly_divrem(&p(&[0, 0, 0, 1]), &p(&[0, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), P::zero()));

        let (q, r) = poly_divrem(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), P::zero()));

        // (2/3)x^2 + x = ((1/3)x + 1/2) * 2x
        let a = P::new(vec![rat(0, 1), rat(1, 1), rat(2, 3)]);
        let (q, r) = poly_divrem(&a, &p(&[0, 2])).unwrap();
        assert_eq!(q, P::new(vec![rat(1, 2), rat(1, 3)]));
        assert!(r.is_zero());
        assert_eq!(&q * &p(&[0, 2]), a);
    }

    #[test]
    fn divide_by_zero_polynomial_fails() {
        assert_eq!(
            poly_divrem(&p(&[1, 1]), &P::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn xgcd2_examples() {
        let (g, c1, c2) = xgcd2(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(&(&c1 * &p(&[-1, 0, 1])) + &(&c2 * &p(&[1, 1])), g);

        let (g, c1, c2) = xgcd2(&p(&[0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, P::one());
        assert_eq!(&(&c1 * &p(&[0, 1])) + &(&c2 * &p(&[-1, 1])), g);

        let q = p(&[3, 0, 6]);
        let (g, c1, c2) = xgcd2(&q, &P::zero()).unwrap();
        assert_eq!(g, P::new(vec![rat(1, 2), rat(0, 1), rat(1, 1)]));
        assert_eq!(c1, P::constant(rat(1, 6)));
        assert!(c2.is_zero());

        assert_eq!(xgcd2(&P::zero(), &P::zero()), Err(AlgebraError::GcdOfZeros));
    }

    #[test]
    fn xgcd3_examples() {
        let check = |a: &P, b: &P, c: &P, expect: &P| {
            let (s, f1, f2, f3) = xgcd3(a, b, c).unwrap();
            assert_eq!(&s, expect);
            assert_eq!(&(&(&f1 * a) + &(&f2 * b)) + &(&f3 * c), s);
            for input in [a, b, c] {
                assert!(s.divides(input).unwrap());
            }
        };
        check(&p(&[0, 1]), &p(&[-1, 1]), &p(&[5]), &P::one());
        check(
            &p(&[0, 0, 1]),
            &p(&[0, 0, 1]),
            &p(&[0, 0, 1]),
            &p(&[0, 0, 1]),
        );
        check(&p(&[-1, 0, 1]), &p(&[0, -1, 1]), &p(&[0, 1]), &P::one());
        check(&p(&[-1, 0, 1]), &p(&[0, -1, 1]), &p(&[-1, 1]), &p(&[-1, 1]));
        assert!(xgcd3(&P::zero(), &P::zero(), &P::zero()).is_err());
    }

    #[test]
    fn gcd_matches_xgcd() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[-3, 1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&a, &b), xgcd2(&a, &b).unwrap().0);
    }

    #[test]
    fn display_is_readable() {
        let a = P::new(vec![rat(1, 2), rat(-3, 1), rat(1, 1)]);
        assert_eq!(a.to_string(), "x^2 + -3*x + 1/2");
        assert_eq!(P::zero().to_string(), "0");
    }
}
