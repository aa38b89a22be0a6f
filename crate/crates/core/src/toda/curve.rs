use crate::algebra::{Field, Polynomial};

use super::minors::{minor_det, MinorSpec};
use super::{TodaError, TodaState};

/// The curve `z² + h(x) z − f = 0` cut out by `(−1)^{n−1} z det(L(z) − x E)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralCurve<F: Field> {
    pub h: Polynomial<F>,
    pub f: F,
    pub n: usize,
}

impl<F: Field> SpectralCurve<F> {
    pub fn genus(&self) -> usize {
        self.n - 1
    }

    /// `z² + h z − f` evaluated as a polynomial in `x` for polynomial `z`.
    pub fn norm(&self, z: &Polynomial<F>) -> Polynomial<F> {
        &(&(z * z) + &(&self.h * z)) - &Polynomial::constant(self.f.clone())
    }
}

pub(crate) fn sign<F: Field>(n: usize) -> F {
    if n % 2 == 1 {
        F::one()
    } else {
        -F::one()
    }
}

/// Spectral curve of a state with `n ≥ 3`:
/// `f = −∏ I_i V_i`,
/// `h = (−1)^{n−1} [(I_n + V_{n−1} − x)|ℒ_1| − I_n V_n |¹ℒ_1| − I_{n−1} V_{n−1} |ℒ_2|]`.
pub fn spectral_curve<F: Field>(s: &TodaState<F>) -> Result<SpectralCurve<F>, TodaError> {
    s.require_size(3)?;
    let n = s.n();
    let ni = n as i64;
    let l1 = minor_det(s, MinorSpec::mr(0, 1))?;
    let l1_1 = minor_det(s, MinorSpec::mr(1, 1))?;
    let l2 = minor_det(s, MinorSpec::mr(0, 2))?;
    let lead = Polynomial::new(vec![s.i(ni).clone() + s.v(ni - 1), -F::one()]);
    let inner = &(&(&lead * &l1) - &l1_1.scale(&(s.i(ni).clone() * s.v(ni))))
        - &l2.scale(&(s.i(ni - 1).clone() * s.v(ni - 1)));
    Ok(SpectralCurve {
        h: inner.scale(&sign(n)),
        f: -(s.prod_i() * s.prod_v()),
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::BivariateLaurent;
    use crate::algebra::{laurent_det, rat, Rational};
    use crate::toda::lax::{characteristic_matrix, lax_matrices};
    use crate::toda::{cyclic_shift, toda_step};

    fn worked() -> TodaState<Rational> {
        TodaState::from_i64s(&[1, 2, 3], &[4, 5, 6]).unwrap()
    }

    #[test]
    fn worked_curve() {
        let c = spectral_curve(&worked()).unwrap();
        assert_eq!(c.f, rat(-720, 1));
        assert_eq!(c.h, Polynomial::from_i64s(&[126, -114, 21, -1]));
        assert_eq!(c.genus(), 2);
    }

    /// `(−1)^{n−1} z det(L − xE) = z² + h z − f` for both products.
    #[test]
    fn curve_matches_dense_determinant() {
        for s in [
            worked(),
            TodaState::from_i64s(&[2, -1, 3, 5], &[1, 4, -2, 3]).unwrap(),
        ] {
            let c = spectral_curve(&s).unwrap();
            let lax = lax_matrices(&s).unwrap();
            let expected = &(&BivariateLaurent::z_pow(Rational::from_i64(1), 2)
                + &BivariateLaurent::monomial(c.h.clone(), 1))
                - &BivariateLaurent::constant(c.f.clone());
            for m in [&lax.l_mr, &lax.l_rm] {
                let det = laurent_det(&characteristic_matrix(m)).unwrap();
                let lhs = det
                    .shift_z(1)
                    .terms()
                    .map(|(k, p)| BivariateLaurent::monomial(p.scale(&sign(s.n())), k))
                    .fold(BivariateLaurent::zero(), |a, b| &a + &b);
                assert_eq!(lhs, expected);
            }
        }
    }

    #[test]
    fn curve_is_invariant() {
        let s = worked();
        let c = spectral_curve(&s).unwrap();
        assert_eq!(spectral_curve(&toda_step(&s).unwrap()).unwrap(), c);
        for k in 1..3 {
            assert_eq!(spectral_curve(&cyclic_shift(&s, k)).unwrap(), c);
        }
    }

    #[test]
    fn small_systems_are_rejected() {
        let s = TodaState::<Rational>::from_i64s(&[2, 3], &[1, 1]).unwrap();
        assert!(spectral_curve(&s).is_err());
    }
}
