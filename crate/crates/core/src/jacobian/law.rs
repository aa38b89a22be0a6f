//! Composition, reduction and the derived group operations.

use std::sync::Arc;

use crate::algebra::{xgcd3, AlgebraError, Field, Polynomial};

use super::curve::{Branch, HyperellipticCurve};
use super::divisor::MumfordDivisor;
use super::JacobianError;

/// Output of [`compose`]: `P̃ | Q̃² + hQ̃ − f` but `deg P̃` may exceed the genus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition<F: Field> {
    pub p: Polynomial<F>,
    pub q: Polynomial<F>,
    /// Twice the multiplicity of `∞₋`, as for [`MumfordDivisor::d`].
    pub d: i64,
}

fn same_curve<F: Field>(a: &MumfordDivisor<F>, b: &MumfordDivisor<F>) -> Result<(), JacobianError> {
    if Arc::ptr_eq(a.curve(), b.curve()) || a.curve() == b.curve() {
        Ok(())
    } else {
        Err(JacobianError::CurveMismatch)
    }
}

fn inexact(e: AlgebraError) -> JacobianError {
    match e {
        AlgebraError::InexactDivision => JacobianError::CompositionNotExact,
        other => JacobianError::Algebra(other),
    }
}

/// First step of the group law: with `s = gcd(P₁, P₂, Q₁ + Q₂ + h) = f₁P₁ + f₂P₂ + f₃(Q₁ + Q₂ + h)`,
/// `P̃ = P₁P₂/s²` and `Q̃ = (f₁P₁Q₂ + f₂P₂Q₁ + f₃(Q₁Q₂ + f))/s mod P̃`.
pub fn compose<F: Field>(
    a: &MumfordDivisor<F>,
    b: &MumfordDivisor<F>,
) -> Result<Composition<F>, JacobianError> {
    same_curve(a, b)?;
    let c = a.curve();
    let (p1, q1, p2, q2) = (a.p(), a.q(), b.p(), b.q());
    let (s, f1, f2, f3) = xgcd3(p1, p2, &(&(q1 + q2) + c.h()))?;
    let p = (p1 * p2).exact_div(&(&s * &s)).map_err(inexact)?;
    let numer = &(&(&(&f1 * p1) * q2) + &(&(&f2 * p2) * q1)) + &(&f3 * &(&(q1 * q2) + c.f()));
    let q = numer.exact_div(&s).map_err(inexact)?.rem(&p)?;
    let deg_s = s.degree().expect("gcd is monic") as i64;
    Ok(Composition {
        p,
        q,
        d: a.d() + b.d() - 2 * deg_s,
    })
}

/// Replace `[P, Q]` by the complementary pair cut out by `z − q_rep`, where
/// `q_rep ≡ Q (mod P)`, updating the weight at `∞₋`.
fn step<F: Field>(
    curve: &HyperellipticCurve<F>,
    p: &Polynomial<F>,
    weight: i64,
    q_rep: &Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>, i64), JacobianError> {
    let norm = curve.norm(q_rep);
    let plus = curve.pole_order(Branch::Plus, q_rep);
    let minus = curve.pole_order(Branch::Minus, q_rep);
    if norm.degree_i64() != plus + minus {
        return Err(JacobianError::ReductionFailed(
            "pole orders at infinity disagree with the norm degree".into(),
        ));
    }
    let next = norm
        .exact_div(p)
        .map_err(|_| JacobianError::ReductionFailed("P does not divide the norm".into()))?
        .monic()
        .ok_or_else(|| JacobianError::ReductionFailed("vanishing norm".into()))?;
    let next_q = (&(-curve.h()) - q_rep).rem(&next)?;
    let k = next.degree().expect("monic") as i64;
    Ok((next, next_q, weight + k - minus))
}

/// The representative of `Q mod P` closest to the branch polynomial `Z±`.
fn near_branch<F: Field>(
    curve: &HyperellipticCurve<F>,
    b: Branch,
    p: &Polynomial<F>,
    q: &Polynomial<F>,
) -> Result<Polynomial<F>, JacobianError> {
    let z = curve.branch(b);
    Ok(z + &(q - z).rem(p)?)
}

/// Second step of the group law: bring a composition to its unique reduced representative.
///
/// While `deg P > g`, or the weight is above its window, step with the representative of
/// `Q` nearest `Z₊`; while the weight is below its window, step with the one nearest `Z₋`.
/// On a spectral curve `Z₊ = 0`, so the first kind of step is exactly
/// `[(Q̃² + hQ̃ − f)/P̃ made monic, −(Q̃ + h) mod P]`.
pub fn reduce<F: Field>(
    c: Composition<F>,
    curve: &Arc<HyperellipticCurve<F>>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    if c.d % 2 != 0 {
        return Err(JacobianError::ReductionFailed("odd d".into()));
    }
    let g = curve.genus();
    let (mut p, mut q, mut m) = (c.p, c.q, c.d / 2);
    let budget = 4 * (p.degree().unwrap_or(0) + g + 4) + m.unsigned_abs() as usize;
    for _ in 0..budget {
        let k = p
            .degree()
            .ok_or_else(|| JacobianError::ReductionFailed("P = 0".into()))?;
        let (lo, hi) = curve.weight_window(k);
        let branch = if k > g || m > hi {
            Branch::Plus
        } else if m < lo {
            Branch::Minus
        } else {
            return Ok(MumfordDivisor::from_parts(p, q, m, Arc::clone(curve)));
        };
        let rep = near_branch(curve, branch, &p, &q)?;
        (p, q, m) = step(curve, &p, m, &rep)?;
    }
    Err(JacobianError::ReductionFailed("did not terminate".into()))
}

/// `a ⊞ b`.
pub fn add<F: Field>(
    a: &MumfordDivisor<F>,
    b: &MumfordDivisor<F>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    reduce(compose(a, b)?, a.curve())
}

/// The inverse: `[P, −(h + Q) mod P]` with `d ↦ 2 deg P − d`, then re-reduced.
///
/// For even genus the re-reduction never moves the pair; for odd genus it can,
/// because the balanced weight window is not symmetric.
pub fn neg<F: Field>(a: &MumfordDivisor<F>) -> Result<MumfordDivisor<F>, JacobianError> {
    let c = a.curve();
    let q = (&(-c.h()) - a.q()).rem(a.p())?;
    let k = a.p().degree().expect("monic") as i64;
    reduce(
        Composition {
            p: a.p().clone(),
            q,
            d: 2 * k - a.d(),
        },
        c,
    )
}

/// `a ⊟ b = a ⊞ (−b)`.
pub fn sub<F: Field>(
    a: &MumfordDivisor<F>,
    b: &MumfordDivisor<F>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    add(a, &neg(b)?)
}

/// `k ⊡ a` by double-and-add.
pub fn scalar_mul<F: Field>(
    k: i64,
    a: &MumfordDivisor<F>,
) -> Result<MumfordDivisor<F>, JacobianError> {
    let base = if k < 0 { neg(a)? } else { a.clone() };
    let mut acc = MumfordDivisor::zero(Arc::clone(a.curve()));
    let bits = k.unsigned_abs();
    for i in (0..u64::BITS - bits.leading_zeros()).rev() {
        acc = add(&acc, &acc)?;
        if bits >> i & 1 == 1 {
            acc = add(&acc, &base)?;
        }
    }
    Ok(acc)
}
