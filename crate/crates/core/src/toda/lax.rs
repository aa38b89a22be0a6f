use crate::algebra::{BivariateLaurent, Field, LaurentMatrix, Polynomial};

use super::{TodaError, TodaState};

/// The factors `M`, `R` of the Lax pair and their two products.
#[derive(Clone, Debug)]
pub struct LaxMatrices<F: Field> {
    pub m: LaurentMatrix<F>,
    pub r: LaurentMatrix<F>,
    /// `M R`, whose characteristic polynomial defines the spectral curve.
    pub l_mr: LaurentMatrix<F>,
    /// `R M`, which is the `M R` of the next time step.
    pub l_rm: LaurentMatrix<F>,
}

fn zeros<F: Field>(n: usize) -> LaurentMatrix<F> {
    vec![vec![BivariateLaurent::zero(); n]; n]
}

fn c<F: Field>(v: F) -> BivariateLaurent<F> {
    BivariateLaurent::constant(v)
}

/// Build `M` (unit lower bidiagonal with `V_n/z` in the corner), `R` (upper bidiagonal with
/// `I_j` on the diagonal and `z` in the corner) and both products. Requires `n ≥ 3`.
pub fn lax_matrices<F: Field>(s: &TodaState<F>) -> Result<LaxMatrices<F>, TodaError> {
    s.require_size(3)?;
    let n = s.n();
    let mut m = zeros(n);
    let mut r = zeros(n);
    for j in 0..n {
        m[j][j] = BivariateLaurent::one();
        r[j][j] = c(s.i(j as i64 + 1).clone());
        if j + 1 < n {
            m[j + 1][j] = c(s.v(j as i64 + 1).clone());
            r[j][j + 1] = BivariateLaurent::one();
        }
    }
    m[0][n - 1] = BivariateLaurent::z_pow(s.v(n as i64).clone(), -1);
    r[n - 1][0] = BivariateLaurent::z_pow(F::one(), 1);
    let l_mr = crate::algebra::laurent::mat_mul(&m, &r);
    let l_rm = crate::algebra::laurent::mat_mul(&r, &m);
    Ok(LaxMatrices { m, r, l_mr, l_rm })
}

/// `A − x·E`, the matrix whose determinant is the spectral polynomial of `A`.
pub fn characteristic_matrix<F: Field>(a: &LaurentMatrix<F>) -> LaurentMatrix<F> {
    let x = BivariateLaurent::from_poly(Polynomial::x());
    a.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if i == j { e - &x } else { e.clone() })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    fn entry(m: &LaurentMatrix<Rational>, i: usize, j: usize) -> BivariateLaurent<Rational> {
        m[i - 1][j - 1].clone()
    }

    fn k(v: i64) -> BivariateLaurent<Rational> {
        BivariateLaurent::constant(rat(v, 1))
    }

    #[test]
    fn products_have_the_expected_shape() {
        let s = TodaState::<Rational>::from_i64s(&[1, 2, 3], &[4, 5, 6]).unwrap();
        let lax = lax_matrices(&s).unwrap();
        let mr = &lax.l_mr;
        let diag: Vec<_> = (1..=3).map(|j| entry(mr, j, j)).collect();
        assert_eq!(diag, vec![k(7), k(6), k(8)]);
        assert_eq!(entry(mr, 2, 1), k(4));
        assert_eq!(entry(mr, 3, 2), k(10));
        assert_eq!(entry(mr, 1, 2), k(1));
        assert_eq!(entry(mr, 1, 3), BivariateLaurent::z_pow(rat(18, 1), -1));
        assert_eq!(entry(mr, 3, 1), BivariateLaurent::z_pow(rat(1, 1), 1));

        let rm = &lax.l_rm;
        let diag: Vec<_> = (1..=3).map(|j| entry(rm, j, j)).collect();
        assert_eq!(diag, vec![k(5), k(7), k(9)]);
        assert_eq!(entry(rm, 2, 1), k(8));
        assert_eq!(entry(rm, 3, 2), k(15));
        assert_eq!(entry(rm, 1, 3), BivariateLaurent::z_pow(rat(6, 1), -1));
        assert_eq!(entry(rm, 3, 1), BivariateLaurent::z_pow(rat(1, 1), 1));
    }

    #[test]
    fn small_systems_are_rejected() {
        let s = TodaState::<Rational>::from_i64s(&[1, 2], &[4, 5]).unwrap();
        assert!(matches!(
            lax_matrices(&s),
            Err(TodaError::TooSmall { n: 2, min: 3 })
        ));
    }
}
