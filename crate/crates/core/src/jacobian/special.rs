//! The divisors attached to Toda states.

use std::sync::Arc;

use crate::algebra::{Field, Polynomial};
use crate::toda::{spectral_curve, uvw, TodaState};

use super::curve::{HyperellipticCurve, StandardFormCurve};
use super::divisor::MumfordDivisor;
use super::law::{add, scalar_mul, sub};
use super::JacobianError;

/// `Ψ(s) = ([u, v mod u], d)` on the spectral curve of `s`, with `d = n` for odd genus
/// and `d = n − 1` for even genus.
pub fn eigenvector_map<F: Field>(s: &TodaState<F>) -> Result<MumfordDivisor<F>, JacobianError> {
    let curve = Arc::new(HyperellipticCurve::from_spectral(&spectral_curve(s)?)?);
    eigenvector_map_on(s, &curve)
}

/// [`eigenvector_map`] onto an already-built copy of the spectral curve.
pub fn eigenvector_map_on<F: Field>(
    s: &TodaState<F>,
    curve: &Arc<HyperellipticCurve<F>>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    let data = uvw(s)?;
    let n = s.n() as i64;
    let d = if (n - 1) % 2 == 1 { n } else { n - 1 };
    if !data.u.is_monic() {
        return Err(JacobianError::ReductionFailed("u is not monic".into()));
    }
    MumfordDivisor::new(data.u, data.v, d, Arc::clone(curve))
}

/// `([x, (−1)^n ∏I], 2)`, the translation realizing one time step.
pub fn divisor_d<F: Field>(s: &TodaState<F>) -> Result<MumfordDivisor<F>, JacobianError> {
    let curve = Arc::new(HyperellipticCurve::from_spectral(&spectral_curve(s)?)?);
    divisor_d_on(s, &curve)
}

fn sign_n<F: Field>(n: usize) -> F {
    if n.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

pub fn divisor_d_on<F: Field>(
    s: &TodaState<F>,
    curve: &Arc<HyperellipticCurve<F>>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    let c = sign_n::<F>(s.n()) * s.prod_i();
    MumfordDivisor::new(
        Polynomial::x(),
        Polynomial::constant(c),
        2,
        Arc::clone(curve),
    )
}

/// `([x, (−1)^n (∏I − ∏V)], 2)` on the standard form `y² = h² + 4f`.
pub fn divisor_d_tilde<F: Field>(
    s: &TodaState<F>,
) -> Result<(StandardFormCurve<F>, MumfordDivisor<F>), JacobianError> {
    let spectral = spectral_curve(s)?;
    let model = Arc::new(HyperellipticCurve::from_spectral(&spectral)?.standard_form());
    let c = sign_n::<F>(s.n()) * (s.prod_i() - s.prod_v());
    let e = MumfordDivisor::new(Polynomial::x(), Polynomial::constant(c), 2, model)?;
    Ok((StandardFormCurve::from_spectral(&spectral), e))
}

/// Transport along `(x, z) ↦ (x, 2z + h)`: `[P, (2Q + h) mod P]`, same `d`.
pub fn to_standard_form<F: Field>(
    a: &MumfordDivisor<F>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    let c = a.curve();
    let q = &a.q().scale(&F::from_i64(2)) + c.h();
    MumfordDivisor::new(a.p().clone(), q, a.d(), Arc::new(c.standard_form()))
}

/// The generator `([1, 0], 2)` of the cyclic group that absorbs index shifts.
pub fn torsion_generator<F: Field>(curve: &Arc<HyperellipticCurve<F>>) -> MumfordDivisor<F> {
    MumfordDivisor::from_parts(Polynomial::one(), Polynomial::zero(), 1, Arc::clone(curve))
}

/// Smallest `k` in `0..n` with `a ⊟ k ⊡ G = b`, where `n = g + 1` and `G` is the torsion
/// generator; `None` when `a` and `b` differ by something outside that group.
pub fn equal_mod_cn<F: Field>(
    a: &MumfordDivisor<F>,
    b: &MumfordDivisor<F>,
) -> Result<Option<usize>, JacobianError> {
    let g = torsion_generator(a.curve());
    let n = a.curve().genus() + 1;
    let mut current = a.clone();
    for k in 0..n {
        if current == *b {
            return Ok(Some(k));
        }
        current = sub(&current, &g)?;
    }
    Ok(None)
}

/// `Ψ(s) ⊞ t ⊡ D`, the predicted image of `t` time steps.
pub fn predicted_after<F: Field>(
    psi: &MumfordDivisor<F>,
    d: &MumfordDivisor<F>,
    t: i64,
) -> Result<MumfordDivisor<F>, JacobianError> {
    add(psi, &scalar_mul(t, d)?)
}
