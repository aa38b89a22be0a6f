use crate::algebra::laurent::{delete_rows_cols, laurent_det};
use crate::algebra::{BivariateLaurent, Field, Polynomial};

use super::curve::{sign, spectral_curve, SpectralCurve};
use super::lax::{characteristic_matrix, lax_matrices};
use super::minors::{minor_det, MinorSpec};
use super::{TodaError, TodaState};

/// The polynomials `u, v, w` built from `M R`, their counterparts from `R M`, and the curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenvectorData<F: Field> {
    pub u: Polynomial<F>,
    pub v: Polynomial<F>,
    pub w: Polynomial<F>,
    pub u_rm: Polynomial<F>,
    pub v_rm: Polynomial<F>,
    pub w_rm: Polynomial<F>,
    pub curve: SpectralCurve<F>,
}

/// With `ε = (−1)^{n−1}`:
/// `u = ε|ℒ_1|`, `v = ε I_n V_n |¹ℒ_1|`, `w = ε I_{n−1} V_{n−1} |ℒ_2|`, and from `R M`
/// `u = ε|ℛℳ_1|`, `v = ε I_1 V_n |¹ℛℳ_1|`, `w = ε I_n V_{n−1} |ℛℳ_2|`.
pub fn uvw<F: Field>(s: &TodaState<F>) -> Result<EigenvectorData<F>, TodaError> {
    let curve = spectral_curve(s)?;
    let n = s.n() as i64;
    let e: F = sign(s.n());
    let det = |spec| minor_det(s, spec);
    let u = det(MinorSpec::mr(0, 1))?.scale(&e);
    let v = det(MinorSpec::mr(1, 1))?.scale(&(e.clone() * s.i(n) * s.v(n)));
    let w = det(MinorSpec::mr(0, 2))?.scale(&(e.clone() * s.i(n - 1) * s.v(n - 1)));
    let u_rm = det(MinorSpec::rm(0, 1))?.scale(&e);
    let v_rm = det(MinorSpec::rm(1, 1))?.scale(&(e.clone() * s.i(1) * s.v(n)));
    let w_rm = det(MinorSpec::rm(0, 2))?.scale(&(e * s.i(n) * s.v(n - 1)));
    Ok(EigenvectorData {
        u,
        v,
        w,
        u_rm,
        v_rm,
        w_rm,
        curve,
    })
}

/// `φ_i = (−1)^{i−1} det(ℒ with row n and column i removed)`, the cofactor vector
/// annihilated by the first `n − 1` rows of `L(z) − x E`.
pub fn eigenvector_components<F: Field>(
    s: &TodaState<F>,
) -> Result<Vec<BivariateLaurent<F>>, TodaError> {
    let lax = lax_matrices(s)?;
    let ch = characteristic_matrix(&lax.l_mr);
    let n = s.n();
    (0..n)
        .map(|i| {
            let minor = laurent_det(&delete_rows_cols(&ch, &[n - 1], &[i]))?;
            Ok(if i % 2 == 0 { minor } else { -&minor })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::mat_vec;
    use crate::algebra::{rat, Rational};

    fn worked() -> TodaState<Rational> {
        TodaState::from_i64s(&[1, 2, 3], &[4, 5, 6]).unwrap()
    }

    #[test]
    fn worked_polynomials() {
        let d = uvw(&worked()).unwrap();
        assert_eq!(d.u, Polynomial::from_i64s(&[38, -13, 1]));
        assert_eq!(d.v, Polynomial::from_i64s(&[108, -18]));
        assert_eq!(d.w, Polynomial::from_i64s(&[70, -10]));
        let h = &d.curve.h;
        let x = Polynomial::x();
        let c = |v: i64| Polynomial::constant(rat(v, 1));
        assert!((&(&(h + &d.v) + &d.w) - &(&(&c(8) - &x) * &d.u)).is_zero());
        assert!((&(&(h + &d.v_rm) + &d.w_rm) - &(&(&c(9) - &x) * &d.u_rm)).is_zero());
        // ((−1)^n ∏I − v(0)) / u(0) = −I_n
        assert_eq!((rat(-6, 1) - d.v.at_zero()) / d.u.at_zero(), rat(-3, 1));
    }

    #[test]
    fn components_satisfy_the_eigen_equation() {
        for s in [
            worked(),
            TodaState::from_i64s(&[2, -1, 3, 5], &[1, 4, -2, 3]).unwrap(),
        ] {
            let n = s.n();
            let d = uvw(&s).unwrap();
            let phi = eigenvector_components(&s).unwrap();
            assert_eq!(phi[n - 1], BivariateLaurent::from_poly(d.u.clone()));
            let one = BivariateLaurent::one();
            assert_eq!(phi[0], &one - &BivariateLaurent::monomial(d.v.clone(), -1));

            let lax = lax_matrices(&s).unwrap();
            let out = mat_vec(&characteristic_matrix(&lax.l_mr), &phi);
            assert!(out[..n - 1].iter().all(BivariateLaurent::is_zero));
            // last entry is (z² + h z − f)/z
            let curve_over_z = &(&BivariateLaurent::z_pow(Rational::from_i64(1), 1)
                + &BivariateLaurent::from_poly(d.curve.h.clone()))
                - &BivariateLaurent::z_pow(d.curve.f.clone(), -1);
            assert_eq!(out[n - 1], curve_over_z);
        }
    }
}
