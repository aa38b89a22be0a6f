//! Laurent polynomials in a spectral parameter `z` with polynomial-in-`x` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::poly::Polynomial;
use super::AlgebraError;

/// `Σ_k c_k(x) z^k` with finitely many nonzero `c_k`, `k` any integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateLaurent<F: Field> {
    terms: BTreeMap<i64, Polynomial<F>>,
}

pub type LaurentMatrix<F> = Vec<Vec<BivariateLaurent<F>>>;

impl<F: Field> BivariateLaurent<F> {
    pub fn zero() -> Self {
        BivariateLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        Self::monomial(p, 0)
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// `p(x) * z^k`.
    pub fn monomial(p: Polynomial<F>, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(k, p);
        }
        BivariateLaurent { terms }
    }

    /// `c * z^k`.
    pub fn z_pow(c: F, k: i64) -> Self {
        Self::monomial(Polynomial::constant(c), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient polynomial of `z^k`.
    pub fn coeff(&self, k: i64) -> Polynomial<F> {
        self.terms.get(&k).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Polynomial<F>)> {
        self.terms.iter().map(|(k, p)| (*k, p))
    }

    pub fn min_z_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_z_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `z^k`.
    pub fn shift_z(&self, k: i64) -> Self {
        BivariateLaurent {
            terms: self.terms.iter().map(|(e, p)| (e + k, p.clone())).collect(),
        }
    }

    fn insert_add(&mut self, k: i64, p: Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }
}

impl<F: Field> Add<&BivariateLaurent<F>> for &BivariateLaurent<F> {
    type Output = BivariateLaurent<F>;
    fn add(self, rhs: &BivariateLaurent<F>) -> BivariateLaurent<F> {
        let mut out = self.clone();
        for (k, p) in &rhs.terms {
            out.insert_add(*k, p.clone());
        }
        out
    }
}

impl<F: Field> Sub<&BivariateLaurent<F>> for &BivariateLaurent<F> {
    type Output = BivariateLaurent<F>;
    fn sub(self, rhs: &BivariateLaurent<F>) -> BivariateLaurent<F> {
        let mut out = self.clone();
        for (k, p) in &rhs.terms {
            out.insert_add(*k, -p);
        }
        out
    }
}

impl<F: Field> Mul<&BivariateLaurent<F>> for &BivariateLaurent<F> {
    type Output = BivariateLaurent<F>;
    fn mul(self, rhs: &BivariateLaurent<F>) -> BivariateLaurent<F> {
        let mut out = BivariateLaurent::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.insert_add(i + j, a * b);
            }
        }
        out
    }
}

impl<F: Field> Neg for &BivariateLaurent<F> {
    type Output = BivariateLaurent<F>;
    fn neg(self) -> BivariateLaurent<F> {
        BivariateLaurent {
            terms: self.terms.iter().map(|(k, p)| (*k, -p)).collect(),
        }
    }
}

impl<F: Field> fmt::Display for BivariateLaurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, p) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*z")?,
                _ => write!(f, "({p})*z^{k}")?,
            }
        }
        Ok(())
    }
}

pub fn mat_mul<F: Field>(a: &LaurentMatrix<F>, b: &LaurentMatrix<F>) -> LaurentMatrix<F> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = BivariateLaurent::zero();
                    for k in 0..inner {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Matrix-vector product.
pub fn mat_vec<F: Field>(
    a: &LaurentMatrix<F>,
    v: &[BivariateLaurent<F>],
) -> Vec<BivariateLaurent<F>> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(BivariateLaurent::zero(), |acc, (m, x)| &acc + &(m * x))
        })
        .collect()
}

/// Delete the listed rows and columns (0-based).
pub fn delete_rows_cols<F: Field>(
    m: &LaurentMatrix<F>,
    rows: &[usize],
    cols: &[usize],
) -> LaurentMatrix<F> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| !rows.contains(i))
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| !cols.contains(j))
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

/// Exact determinant by cofactor expansion along the first remaining row.
///
/// Minors are memoized by their column set, so the cost is `O(2^n n)` products
/// rather than `n!`.
pub fn laurent_det<F: Field>(
    m: &[Vec<BivariateLaurent<F>>],
) -> Result<BivariateLaurent<F>, AlgebraError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::NotSquare);
    }
    if n == 0 {
        return Ok(BivariateLaurent::one());
    }
    if n > 20 {
        return Err(AlgebraError::TooLarge(n));
    }
    // det of rows (n - popcount(mask))..n restricted to the columns in mask
    let mut memo: Vec<Option<BivariateLaurent<F>>> = vec![None; 1 << n];
    memo[0] = Some(BivariateLaurent::one());
    fn rec<F: Field>(
        m: &[Vec<BivariateLaurent<F>>],
        mask: usize,
        memo: &mut Vec<Option<BivariateLaurent<F>>>,
    ) -> BivariateLaurent<F> {
        if let Some(v) = &memo[mask] {
            return v.clone();
        }
        let n = m.len();
        let row = n - mask.count_ones() as usize;
        let mut acc = BivariateLaurent::zero();
        let mut sign_pos = true;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = rec(m, mask & !(1 << col), memo);
                let term = entry * &minor;
                acc = if sign_pos { &acc + &term } else { &acc - &term };
            }
            sign_pos = !sign_pos;
        }
        memo[mask] = Some(acc.clone());
        acc
    }
    Ok(rec(m, (1 << n) - 1, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Rational;

    type L = BivariateLaurent<Rational>;

    fn c(v: i64) -> L {
        L::constant(Rational::from_i64(v))
    }

    #[test]
    fn small_determinants() {
        let id = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        assert_eq!(laurent_det(&id).unwrap(), L::one());

        let diag = vec![
            vec![L::z_pow(Rational::from_i64(1), 1), c(0)],
            vec![c(0), L::z_pow(Rational::from_i64(1), -1)],
        ];
        assert_eq!(laurent_det(&diag).unwrap(), L::one());

        let ragged = vec![vec![c(1), c(2)], vec![c(3)]];
        assert_eq!(laurent_det(&ragged), Err(AlgebraError::NotSquare));
    }

    #[test]
    fn det_of_3x3_matches_rule_of_sarrus() {
        let m = vec![
            vec![c(2), c(-1), c(3)],
            vec![c(0), c(4), c(5)],
            vec![c(1), c(-2), c(6)],
        ];
        // 2(24+10) - (-1)(0-5) + 3(0-4) = 68 - 5 - 12
        assert_eq!(laurent_det(&m).unwrap(), c(51));
    }

    #[test]
    fn z_exponents_cancel() {
        let a = &L::z_pow(Rational::from_i64(3), 2) * &L::z_pow(Rational::from_i64(1), -2);
        assert_eq!(a, c(3));
        assert!((&a - &c(3)).is_zero());
    }
}
