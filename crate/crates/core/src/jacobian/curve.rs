use crate::algebra::{Field, Polynomial};
use crate::toda::SpectralCurve;

use super::JacobianError;

/// One of the two places at infinity of a real hyperelliptic model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    Plus,
    Minus,
}

/// A real hyperelliptic curve `z² + h(x) z − f(x) = 0` of genus `g`.
///
/// Near `x = ∞` the two solutions are `z ≈ Z₊` and `z ≈ Z₋`, where
/// `Z± = (−h ± S)/2` and `S` is the polynomial part of `√(h² + 4f)`. The points
/// at infinity `∞₊`, `∞₋` sit on those branches. For a spectral curve `S = h`,
/// so `∞₊` is where `z → 0` and `∞₋` is where `z ≈ −h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperellipticCurve<F: Field> {
    h: Polynomial<F>,
    f: Polynomial<F>,
    genus: usize,
    split: Polynomial<F>,
    z_plus: Polynomial<F>,
    z_minus: Polynomial<F>,
    tail: i64,
}

fn half<F: Field>() -> F {
    F::from_i64(2).inv().expect("characteristic zero")
}

impl<F: Field> HyperellipticCurve<F> {
    /// Build the model from `h`, `f` and the polynomial part `S` of `√(h² + 4f)`.
    ///
    /// Requires `deg S = g + 1 ≥ 2` and `0 ≤ deg(h² + 4f − S²) ≤ g`.
    pub fn new(
        h: Polynomial<F>,
        f: Polynomial<F>,
        split: Polynomial<F>,
    ) -> Result<Self, JacobianError> {
        let bad = |msg: &str| Err(JacobianError::BadModel(msg.to_string()));
        let genus = match split.degree() {
            Some(d) if d >= 2 => d - 1,
            _ => return bad("square-root part must have degree at least 2"),
        };
        let disc = &(&h * &h) + &f.scale(&F::from_i64(4));
        let rest = &disc - &(&split * &split);
        let rest_deg = match rest.degree() {
            Some(d) => d,
            None => return bad("h² + 4f is a perfect square"),
        };
        if rest_deg > genus {
            return bad("S is not the polynomial part of √(h² + 4f)");
        }
        let z_plus = (&split - &h).scale(&half());
        let z_minus = (&(-&split) - &h).scale(&half());
        Ok(HyperellipticCurve {
            h,
            f,
            genus,
            split,
            z_plus,
            z_minus,
            tail: genus as i64 + 1 - rest_deg as i64,
        })
    }

    /// The model of `z² + h z − f = 0` from a Toda spectral curve (`f ≠ 0`).
    pub fn from_spectral(c: &SpectralCurve<F>) -> Result<Self, JacobianError> {
        if c.f.is_zero() {
            return Err(JacobianError::BadModel(
                "f = 0 gives a reducible curve".into(),
            ));
        }
        Self::new(c.h.clone(), Polynomial::constant(c.f.clone()), c.h.clone())
    }

    /// The image under `(x, z) ↦ (x, 2z + h)`: `y² = h² + 4f`, written with `h = 0`.
    /// Branch labels are preserved.
    pub fn standard_form(&self) -> Self {
        let rhs = &(&self.h * &self.h) + &self.f.scale(&F::from_i64(4));
        Self::new(Polynomial::zero(), rhs, self.split.scale(&F::from_i64(2)))
            .expect("the transform of a valid model is valid")
    }

    pub fn h(&self) -> &Polynomial<F> {
        &self.h
    }

    pub fn f(&self) -> &Polynomial<F> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `q² + h q − f`.
    pub fn norm(&self, q: &Polynomial<F>) -> Polynomial<F> {
        &(&(q * q) + &(&self.h * q)) - &self.f
    }

    /// The polynomial `Z±` that `z` approaches on the given branch.
    pub fn branch(&self, b: Branch) -> &Polynomial<F> {
        match b {
            Branch::Plus => &self.z_plus,
            Branch::Minus => &self.z_minus,
        }
    }

    /// Pole order of the function `z − q` at `∞±` (negative for a zero).
    pub fn pole_order(&self, b: Branch, q: &Polynomial<F>) -> i64 {
        let diff = self.branch(b) - q;
        match diff.degree() {
            Some(d) => d as i64,
            None => -self.tail,
        }
    }

    /// `⌈g/2⌉`: the largest weight a reduced divisor may carry at `∞₋`.
    pub(crate) fn top_weight(&self) -> i64 {
        (self.genus as i64 + 1) / 2
    }

    /// Admissible weights `m` for a reduced divisor whose `P` has degree `k`.
    pub(crate) fn weight_window(&self, k: usize) -> (i64, i64) {
        let top = self.top_weight();
        (top - self.genus as i64 + k as i64, top)
    }
}

/// The curve `y² = F(x)` with `F = h² + 4f`, the standard form of a spectral curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardFormCurve<F: Field> {
    pub rhs: Polynomial<F>,
    pub genus: usize,
}

impl<F: Field> StandardFormCurve<F> {
    pub fn from_spectral(c: &SpectralCurve<F>) -> Self {
        let rhs = &(&c.h * &c.h) + &Polynomial::constant(c.f.clone() * F::from_i64(4));
        StandardFormCurve {
            rhs,
            genus: c.genus(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    fn worked() -> HyperellipticCurve<Rational> {
        let c = SpectralCurve {
            h: Polynomial::from_i64s(&[126, -114, 21, -1]),
            f: rat(-720, 1),
            n: 3,
        };
        HyperellipticCurve::from_spectral(&c).unwrap()
    }

    #[test]
    fn branches_of_a_spectral_curve() {
        let c = worked();
        assert_eq!(c.genus(), 2);
        assert!(c.branch(Branch::Plus).is_zero());
        assert_eq!(c.branch(Branch::Minus), &(-c.h()));
        // z → 0 with a zero of order g + 1 = 3 on the plus branch
        assert_eq!(c.pole_order(Branch::Plus, &Polynomial::zero()), -3);
        assert_eq!(c.pole_order(Branch::Minus, &Polynomial::zero()), 3);
        assert_eq!(c.weight_window(2), (1, 1));
        assert_eq!(c.weight_window(0), (-1, 1));
    }

    #[test]
    fn pole_orders_add_up_to_the_norm_degree() {
        let c = worked();
        for q in [
            Polynomial::from_i64s(&[3, 1]),
            Polynomial::from_i64s(&[0, 0, 0, 0, 1]),
            Polynomial::from_i64s(&[-126, 114, -21, 1]),
            Polynomial::from_i64s(&[1, -114, 21, -1]),
        ] {
            let total = c.pole_order(Branch::Plus, &q) + c.pole_order(Branch::Minus, &q);
            assert_eq!(c.norm(&q).degree().unwrap() as i64, total, "{q}");
        }
    }

    #[test]
    fn standard_form_keeps_branch_labels() {
        let c = worked();
        let s = c.standard_form();
        assert!(s.h().is_zero());
        assert_eq!(s.genus(), 2);
        // y = 2z + h sends Z± to ±h
        assert_eq!(s.branch(Branch::Plus), c.h());
        assert_eq!(s.branch(Branch::Minus), &(-c.h()));
    }

    #[test]
    fn rejects_degenerate_models() {
        let sq = Polynomial::<Rational>::from_i64s(&[1, 0, 1]);
        assert!(
            HyperellipticCurve::new(Polynomial::zero(), &sq * &sq, sq.scale(&rat(2, 1))).is_err()
        );
        let c = SpectralCurve {
            h: Polynomial::from_i64s(&[1, 0, 0, 1]),
            f: rat(0, 1),
            n: 3,
        };
        assert!(HyperellipticCurve::from_spectral(&c).is_err());
    }
}
