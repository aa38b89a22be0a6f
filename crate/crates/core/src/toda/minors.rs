use crate::algebra::{Field, Polynomial};

use super::{cyclic_shift, TodaError, TodaState};

/// Which tridiagonal matrix a minor is taken from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinorVariant {
    /// `M R − x E`.
    Mr,
    /// `R M − x E`.
    Rm,
    /// `M R − x E` of the state shifted by `σ^j`.
    ShiftedMr(i64),
}

/// The principal minor keeping rows and columns `k+1 ..= n−l` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinorSpec {
    pub k: usize,
    pub l: usize,
    pub variant: MinorVariant,
}

impl MinorSpec {
    pub fn mr(k: usize, l: usize) -> Self {
        MinorSpec {
            k,
            l,
            variant: MinorVariant::Mr,
        }
    }

    pub fn rm(k: usize, l: usize) -> Self {
        MinorSpec {
            k,
            l,
            variant: MinorVariant::Rm,
        }
    }
}

/// Diagonal entry and off-diagonal product of the tridiagonal part, 1-based.
struct Tridiagonal<'a, F: Field> {
    s: &'a TodaState<F>,
    rm: bool,
}

impl<F: Field> Tridiagonal<'_, F> {
    fn diag(&self, j: i64) -> Polynomial<F> {
        let a = self.s.i(j).clone()
            + if self.rm {
                self.s.v(j)
            } else {
                self.s.v(j - 1)
            };
        Polynomial::new(vec![a, -F::one()])
    }

    /// Product of the `(j, j+1)` and `(j+1, j)` entries.
    fn off(&self, j: i64) -> F {
        if self.rm {
            self.s.i(j + 1).clone() * self.s.v(j)
        } else {
            self.s.i(j).clone() * self.s.v(j)
        }
    }
}

fn with_tridiagonal<F: Field, R>(
    s: &TodaState<F>,
    spec: MinorSpec,
    body: impl FnOnce(&Tridiagonal<'_, F>, i64, i64) -> R,
) -> Result<R, TodaError> {
    s.require_size(3)?;
    let n = s.n();
    if spec.k + spec.l == 0 || spec.k + spec.l > n {
        return Err(TodaError::InvalidMinor {
            k: spec.k,
            l: spec.l,
            n,
        });
    }
    let first = spec.k as i64 + 1;
    let last = (n - spec.l) as i64;
    Ok(match spec.variant {
        MinorVariant::Mr => body(&Tridiagonal { s, rm: false }, first, last),
        MinorVariant::Rm => body(&Tridiagonal { s, rm: true }, first, last),
        MinorVariant::ShiftedMr(j) => {
            let shifted = cyclic_shift(s, j);
            body(
                &Tridiagonal {
                    s: &shifted,
                    rm: false,
                },
                first,
                last,
            )
        }
    })
}

/// Determinant of a principal tridiagonal minor, expanding from the top row:
/// `|^kℒ_l| = d_{k+1} |^{k+1}ℒ_l| − b_{k+1} |^{k+2}ℒ_l|`.
///
/// `k + l ≥ 1` is required so the minor avoids the `z` corners; `k + l = n` gives 1.
pub fn minor_det<F: Field>(s: &TodaState<F>, spec: MinorSpec) -> Result<Polynomial<F>, TodaError> {
    with_tridiagonal(s, spec, |t, first, last| {
        let mut below = Polynomial::one();
        let mut below2 = Polynomial::zero();
        for a in (first..=last).rev() {
            let det = &(&t.diag(a) * &below) - &below2.scale(&t.off(a));
            below2 = below;
            below = det;
        }
        below
    })
}

/// The same determinant expanded from the bottom row:
/// `|^kℒ_l| = d_{n−l} |^kℒ_{l+1}| − b_{n−l−1} |^kℒ_{l+2}|`.
pub fn minor_det_from_bottom<F: Field>(
    s: &TodaState<F>,
    spec: MinorSpec,
) -> Result<Polynomial<F>, TodaError> {
    with_tridiagonal(s, spec, |t, first, last| {
        let mut above = Polynomial::one();
        let mut above2 = Polynomial::zero();
        for e in first..=last {
            let det = &(&t.diag(e) * &above) - &above2.scale(&t.off(e - 1));
            above2 = above;
            above = det;
        }
        above
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::delete_rows_cols;
    use crate::algebra::{laurent_det, Rational};
    use crate::toda::lax::{characteristic_matrix, lax_matrices};

    fn worked() -> TodaState<Rational> {
        TodaState::from_i64s(&[1, 2, 3], &[4, 5, 6]).unwrap()
    }

    #[test]
    fn worked_minors() {
        let s = worked();
        assert_eq!(
            minor_det(&s, MinorSpec::mr(0, 1)).unwrap(),
            Polynomial::from_i64s(&[38, -13, 1])
        );
        assert_eq!(
            minor_det(&s, MinorSpec::mr(1, 1)).unwrap(),
            Polynomial::from_i64s(&[6, -1])
        );
        assert_eq!(
            minor_det(&s, MinorSpec::mr(0, 2)).unwrap(),
            Polynomial::from_i64s(&[7, -1])
        );
        assert_eq!(
            minor_det(&s, MinorSpec::mr(1, 2)).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            minor_det(&s, MinorSpec::mr(3, 0)).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn invalid_ranges() {
        let s = worked();
        assert!(matches!(
            minor_det(&s, MinorSpec::mr(0, 0)),
            Err(TodaError::InvalidMinor { .. })
        ));
        assert!(matches!(
            minor_det(&s, MinorSpec::mr(2, 2)),
            Err(TodaError::InvalidMinor { .. })
        ));
    }

    /// Compare the recurrence with a dense determinant of the Lax matrix.
    #[test]
    fn recurrence_agrees_with_dense_determinant() {
        let s = TodaState::<Rational>::from_i64s(&[3, -2, 5, 7, 1], &[2, 9, -4, 1, 6]).unwrap();
        let lax = lax_matrices(&s).unwrap();
        let n = s.n();
        for (mat, variant) in [(&lax.l_mr, MinorVariant::Mr), (&lax.l_rm, MinorVariant::Rm)] {
            let ch = characteristic_matrix(mat);
            for k in 0..=n {
                for l in 0..=(n - k) {
                    if k + l == 0 {
                        continue;
                    }
                    let drop: Vec<usize> = (0..k).chain(n - l..n).collect();
                    let dense = laurent_det(&delete_rows_cols(&ch, &drop, &drop)).unwrap();
                    let spec = MinorSpec { k, l, variant };
                    let fast = minor_det(&s, spec).unwrap();
                    assert_eq!(dense.min_z_degree().unwrap_or(0), 0);
                    assert_eq!(dense.coeff(0), fast, "k={k} l={l} {variant:?}");
                    assert_eq!(minor_det_from_bottom(&s, spec).unwrap(), fast);
                }
            }
        }
    }

    #[test]
    fn shifted_variant_uses_the_shifted_state() {
        let s = worked();
        let spec = MinorSpec {
            k: 0,
            l: 1,
            variant: MinorVariant::ShiftedMr(-1),
        };
        assert_eq!(
            minor_det(&s, spec).unwrap(),
            minor_det(&cyclic_shift(&s, -1), MinorSpec::mr(0, 1)).unwrap()
        );
    }
}
