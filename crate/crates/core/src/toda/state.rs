use crate::algebra::Field;

use super::TodaError;

/// A phase point `(I_1..I_n, V_1..V_n)` of the discrete periodic Toda flow.
///
/// Indices are 1-based and cyclic: `i(k + n) == i(k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TodaState<F: Field> {
    i: Vec<F>,
    v: Vec<F>,
}

impl<F: Field> TodaState<F> {
    pub fn new(i: Vec<F>, v: Vec<F>) -> Result<Self, TodaError> {
        if i.len() != v.len() {
            return Err(TodaError::LengthMismatch {
                i: i.len(),
                v: v.len(),
            });
        }
        if i.len() < 2 {
            return Err(TodaError::TooSmall { n: i.len(), min: 2 });
        }
        if let Some(k) = i.iter().position(Field::is_zero) {
            return Err(TodaError::ZeroCurrent { index: k + 1 });
        }
        Ok(TodaState { i, v })
    }

    pub fn from_i64s(i: &[i64], v: &[i64]) -> Result<Self, TodaError> {
        Self::new(
            i.iter().map(|&x| F::from_i64(x)).collect(),
            v.iter().map(|&x| F::from_i64(x)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.i.len()
    }

    fn wrap(&self, k: i64) -> usize {
        (k - 1).rem_euclid(self.n() as i64) as usize
    }

    /// `I_k`, 1-based, cyclic.
    pub fn i(&self, k: i64) -> &F {
        &self.i[self.wrap(k)]
    }

    /// `V_k`, 1-based, cyclic.
    pub fn v(&self, k: i64) -> &F {
        &self.v[self.wrap(k)]
    }

    pub fn i_values(&self) -> &[F] {
        &self.i
    }

    pub fn v_values(&self) -> &[F] {
        &self.v
    }

    pub fn prod_i(&self) -> F {
        self.i.iter().fold(F::one(), |acc, x| acc * x)
    }

    pub fn prod_v(&self) -> F {
        self.v.iter().fold(F::one(), |acc, x| acc * x)
    }

    pub(crate) fn require_size(&self, min: usize) -> Result<(), TodaError> {
        if self.n() < min {
            Err(TodaError::TooSmall { n: self.n(), min })
        } else {
            Ok(())
        }
    }
}

/// One time step of the flow, via the explicit formula
///
/// `I'_i = V_i + I_i (1 − ∏V/∏I) / (1 + Σ_{k=1}^{n−1} ∏_{l=1}^{k} V_{i−l}/I_{i−l})`,
/// then `V'_i = I_{i+1} V_i / I'_i`.
pub fn toda_step<F: Field>(s: &TodaState<F>) -> Result<TodaState<F>, TodaError> {
    let n = s.n() as i64;
    let ratio = |k: i64| s.v(k).checked_div(s.i(k)).expect("I entries are nonzero");
    let numer = F::one()
        - s.prod_v()
            .checked_div(&s.prod_i())
            .expect("I entries are nonzero");

    let mut next_i = Vec::with_capacity(s.n());
    for i in 1..=n {
        let mut denom = F::one();
        let mut term = F::one();
        for l in 1..n {
            term = term * ratio(i - l);
            denom = denom + &term;
        }
        if denom.is_zero() {
            return Err(TodaError::VanishingDenominator { index: i as usize });
        }
        let value = s.i(i).clone() * numer.checked_div(&denom).expect("checked above") + s.v(i);
        if value.is_zero() {
            return Err(TodaError::LeftDomain { index: i as usize });
        }
        next_i.push(value);
    }
    let next_v = (1..=n)
        .map(|i| {
            (s.i(i + 1).clone() * s.v(i))
                .checked_div(&next_i[(i - 1) as usize])
                .expect("checked nonzero")
        })
        .collect();
    Ok(TodaState {
        i: next_i,
        v: next_v,
    })
}

/// Whether `next` satisfies the recursive update rules relative to `s`:
/// `I'_i = I_i + V_i − V'_{i−1}` and `I'_i V'_i = I_{i+1} V_i` for every `i`.
pub fn toda_step_recursive_check<F: Field>(
    s: &TodaState<F>,
    next: &TodaState<F>,
) -> Result<bool, TodaError> {
    if s.n() != next.n() {
        return Err(TodaError::SizeMismatch {
            left: s.n(),
            right: next.n(),
        });
    }
    let n = s.n() as i64;
    Ok((1..=n).all(|i| {
        let first = *next.i(i) == s.i(i).clone() + s.v(i) - next.v(i - 1);
        let second = next.i(i).clone() * next.v(i) == s.i(i + 1).clone() * s.v(i);
        first && second
    }))
}

/// `σ^k`: the state whose `i`-th entries are the old `(I_{i+k}, V_{i+k})`.
pub fn cyclic_shift<F: Field>(s: &TodaState<F>, k: i64) -> TodaState<F> {
    let n = s.n() as i64;
    let idx = 1..=n;
    TodaState {
        i: idx.clone().map(|j| s.i(j + k).clone()).collect(),
        v: idx.map(|j| s.v(j + k).clone()).collect(),
    }
}
