//! The periodic box-ball system and its tropical Toda description.
//!
//! A state is a cyclic row of boxes holding at most one ball each. Reading it
//! from the start of a block of balls gives soliton lengths `Q` and gap lengths
//! `W`, on which the box-ball step acts as a min-plus version of the Toda flow.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Field, RationalFunction};
use crate::toda::{TodaError, TodaState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoxBallError {
    #[error("invalid cell {0:?}; expected '0' or '1'")]
    BadCell(char),
    #[error("empty state")]
    Empty,
    #[error("{balls} balls in {len} boxes; need fewer than half")]
    TooDense { balls: usize, len: usize },
    #[error("state has no soliton boundary (all boxes equal)")]
    NoSolitons,
    #[error("tropical state needs matching non-empty Q and W")]
    BadTropicalShape,
    #[error("zero entry at {index} has no valuation")]
    ZeroEntry { index: usize },
    #[error("negative valuation {value} at {index}")]
    NegativeValuation { index: usize, value: i64 },
    #[error(transparent)]
    Toda(#[from] TodaError),
}

/// A row of `N` boxes, `true` = ball, with cyclic boundary.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoxBallState {
    cells: Vec<bool>,
}

impl BoxBallState {
    /// Requires fewer balls than half the boxes.
    pub fn new(cells: Vec<bool>) -> Result<Self, BoxBallError> {
        if cells.is_empty() {
            return Err(BoxBallError::Empty);
        }
        let balls = cells.iter().filter(|&&c| c).count();
        if 2 * balls >= cells.len() {
            return Err(BoxBallError::TooDense {
                balls,
                len: cells.len(),
            });
        }
        Ok(BoxBallState { cells })
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn balls(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Number of maximal blocks of balls, read cyclically.
    pub fn solitons(&self) -> usize {
        let n = self.len();
        (0..n)
            .filter(|&i| self.cells[i] && !self.cells[(i + n - 1) % n])
            .count()
    }

    /// Shift every cell `k` boxes to the right.
    pub fn rotate(&self, k: usize) -> Self {
        let n = self.len();
        let mut cells = vec![false; n];
        for (i, &c) in self.cells.iter().enumerate() {
            cells[(i + k) % n] = c;
        }
        BoxBallState { cells }
    }

    /// The lexicographically least rotation, as a canonical name for the orbit under shifts.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len())
            .map(|k| self.rotate(k))
            .min_by(|a, b| a.cells.cmp(&b.cells))
            .expect("non-empty")
    }

    /// Every valid state with `len` boxes, in lexicographic order of the bit pattern.
    pub fn enumerate(len: usize) -> impl Iterator<Item = BoxBallState> {
        assert!((1..64).contains(&len));
        (0u64..1 << len).filter_map(move |bits| {
            let cells = (0..len).map(|i| bits >> (len - 1 - i) & 1 == 1).collect();
            BoxBallState::new(cells).ok()
        })
    }
}

impl FromStr for BoxBallState {
    type Err = BoxBallError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cells = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(BoxBallError::BadCell(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        BoxBallState::new(cells)
    }
}

impl fmt::Display for BoxBallState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.cells {
            f.write_str(if c { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// One step by 10-elimination: repeatedly pair every ball that is directly followed
/// (among the cells still present) by an empty box, drop the pairs, and when no ball is
/// left unpaired move each ball into its partner box.
pub fn bbs_step(s: &BoxBallState) -> BoxBallState {
    let n = s.len();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut next = vec![false; n];
    while remaining.iter().any(|&i| s.cells[i]) {
        let m = remaining.len();
        let mut paired = vec![false; m];
        for j in 0..m {
            let k = (j + 1) % m;
            if s.cells[remaining[j]] && !s.cells[remaining[k]] {
                paired[j] = true;
                paired[k] = true;
                next[remaining[k]] = true;
            }
        }
        remaining = remaining
            .into_iter()
            .zip(paired)
            .filter_map(|(i, p)| (!p).then_some(i))
            .collect();
    }
    BoxBallState { cells: next }
}

/// The same step computed sequentially: cut the ring where the running count
/// `#balls − #empty` is minimal, then move the balls one at a time, leftmost first,
/// each to the nearest empty box on its right.
pub fn bbs_step_sequential(s: &BoxBallState) -> BoxBallState {
    let n = s.len();
    let mut walk = 0i64;
    let mut best = (0i64, 0usize);
    for (i, &c) in s.cells.iter().enumerate() {
        walk += if c { 1 } else { -1 };
        if walk < best.0 {
            best = (walk, i + 1);
        }
    }
    let start = best.1 % n;
    let mut occupied = s.cells.clone();
    for offset in 0..n {
        let p = (start + offset) % n;
        if !s.cells[p] {
            continue;
        }
        let target = (1..n)
            .map(|d| (p + d) % n)
            .find(|&q| !occupied[q])
            .expect("fewer balls than boxes");
        occupied[p] = false;
        occupied[target] = true;
    }
    BoxBallState { cells: occupied }
}

/// Soliton lengths `Q` and gap lengths `W`, indexed cyclically from 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TropicalState {
    q: Vec<u64>,
    w: Vec<u64>,
}

impl TropicalState {
    pub fn new(q: Vec<u64>, w: Vec<u64>) -> Result<Self, BoxBallError> {
        if q.is_empty() || q.len() != w.len() {
            return Err(BoxBallError::BadTropicalShape);
        }
        Ok(TropicalState { q, w })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn w(&self) -> &[u64] {
        &self.w
    }

    fn at(v: &[u64], i: i64) -> i64 {
        v[i.rem_euclid(v.len() as i64) as usize] as i64
    }

    /// `σ^k`: entry `i` becomes the old entry `i + k`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.n() as i64;
        TropicalState {
            q: (0..n).map(|i| Self::at(&self.q, i + k) as u64).collect(),
            w: (0..n).map(|i| Self::at(&self.w, i + k) as u64).collect(),
        }
    }
}

/// One step of the min-plus flow:
/// `Q'_i = min(W_i, Q_i + X_i)`, `W'_i = Q_{i+1} + W_i − Q'_i`, with
/// `X_i = max_{0≤k<n} Σ_{l=1}^{k} (Q_{i−l} − W_{i−l})`.
pub fn tropical_step(s: &TropicalState) -> TropicalState {
    let n = s.n() as i64;
    let q = |i| TropicalState::at(&s.q, i);
    let w = |i| TropicalState::at(&s.w, i);
    let new_q: Vec<i64> = (0..n)
        .map(|i| {
            let mut partial = 0;
            let mut x = 0;
            for l in 1..n {
                partial += q(i - l) - w(i - l);
                x = x.max(partial);
            }
            w(i).min(q(i) + x)
        })
        .collect();
    let new_w = (0..n).map(|i| q(i + 1) + w(i) - new_q[i as usize]);
    TropicalState {
        q: new_q.iter().map(|&v| v as u64).collect(),
        w: new_w.map(|v| v as u64).collect(),
    }
}

/// A tropical state up to `σ`, stored as its lexicographically least rotation of
/// the pair sequence `(Q_1, W_1), …, (Q_n, W_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclicClass {
    representative: TropicalState,
}

impl CyclicClass {
    pub fn representative(&self) -> &TropicalState {
        &self.representative
    }
}

pub fn cyclic_canonicalize(s: &TropicalState) -> CyclicClass {
    let pairs = |t: &TropicalState| -> Vec<(u64, u64)> {
        t.q.iter().copied().zip(t.w.iter().copied()).collect()
    };
    let best = (0..s.n() as i64)
        .map(|k| s.rotate(k))
        .min_by_key(pairs)
        .expect("non-empty");
    CyclicClass {
        representative: best,
    }
}

/// Smallest `k` with `σ^k(a) = b`.
pub fn equal_mod_sigma(a: &TropicalState, b: &TropicalState) -> Option<usize> {
    if a.n() != b.n() {
        return None;
    }
    (0..a.n()).find(|&k| a.rotate(k as i64) == *b)
}

/// The run-length reading started at the first soliton whose leading ball sits at or
/// after box 0.
pub fn eta_sequence(s: &BoxBallState) -> Result<TropicalState, BoxBallError> {
    let n = s.len();
    let start = (0..n)
        .find(|&i| s.cells[i] && !s.cells[(i + n - 1) % n])
        .ok_or(BoxBallError::NoSolitons)?;
    let (mut q, mut w) = (Vec::new(), Vec::new());
    let mut i = 0;
    while i < n {
        let ball = s.cells[(start + i) % n];
        let mut run = 0;
        while i < n && s.cells[(start + i) % n] == ball {
            run += 1;
            i += 1;
        }
        if ball {
            q.push(run)
        } else {
            w.push(run)
        }
    }
    TropicalState::new(q, w)
}

/// The soliton/gap description of a state, up to the choice of first soliton.
pub fn eta(s: &BoxBallState) -> Result<CyclicClass, BoxBallError> {
    eta_sequence(s).map(|t| cyclic_canonicalize(&t))
}

/// `I_i = T^{Q_i}`, `V_i = T^{W_i}` (needs `n ≥ 2`).
pub fn t_lift(s: &TropicalState) -> Result<TodaState<RationalFunction>, BoxBallError> {
    let lift = |v: &[u64]| {
        v.iter()
            .map(|&e| RationalFunction::t_pow(e as i64))
            .collect()
    };
    Ok(TodaState::new(lift(&s.q), lift(&s.w))?)
}

/// Componentwise `T`-adic valuation.
pub fn tropicalize(s: &TodaState<RationalFunction>) -> Result<TropicalState, BoxBallError> {
    let n = s.n();
    let val = |v: &[RationalFunction], offset: usize| -> Result<Vec<u64>, BoxBallError> {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                let index = offset + i + 1;
                if x.is_zero() {
                    return Err(BoxBallError::ZeroEntry { index });
                }
                let value = x.t_adic_valuation().expect("nonzero");
                u64::try_from(value).map_err(|_| BoxBallError::NegativeValuation { index, value })
            })
            .collect()
    };
    TropicalState::new(val(s.i_values(), 0)?, val(s.v_values(), n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::toda_step;

    fn bb(s: &str) -> BoxBallState {
        s.parse().unwrap()
    }

    fn tr(q: &[u64], w: &[u64]) -> TropicalState {
        TropicalState::new(q.to_vec(), w.to_vec()).unwrap()
    }

    #[test]
    fn step_examples() {
        for (a, b) in [
            ("1101000000", "0010110000"),
            ("0000000000", "0000000000"),
            ("1000000000", "0100000000"),
        ] {
            assert_eq!(bbs_step(&bb(a)), bb(b));
            assert_eq!(bbs_step_sequential(&bb(a)), bb(b));
        }
    }

    #[test]
    fn parsing_and_density() {
        assert!(matches!(
            "1111100000".parse::<BoxBallState>(),
            Err(BoxBallError::TooDense { balls: 5, len: 10 })
        ));
        assert!(matches!(
            "10x".parse::<BoxBallState>(),
            Err(BoxBallError::BadCell('x'))
        ));
        assert_eq!(bb("0110100").to_string(), "0110100");
        assert_eq!(bb("11010010000000").solitons(), 3);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(
            eta_sequence(&bb("1101000000")).unwrap(),
            tr(&[2, 1], &[1, 6])
        );
        assert_eq!(
            eta_sequence(&bb("0010110000")).unwrap(),
            tr(&[1, 2], &[1, 6])
        );
        assert_eq!(
            eta_sequence(&bb("11010010000000")).unwrap(),
            tr(&[2, 1, 1], &[1, 2, 7])
        );
        assert!(matches!(eta(&bb("0000")), Err(BoxBallError::NoSolitons)));
    }

    #[test]
    fn tropical_examples() {
        assert_eq!(tropical_step(&tr(&[2, 1], &[1, 6])), tr(&[1, 2], &[1, 6]));
        assert_eq!(tropical_step(&tr(&[3], &[5])), tr(&[3], &[5]));
        let s = bb("11010010000000");
        let via_bbs = eta(&bbs_step(&s)).unwrap();
        let via_trop = cyclic_canonicalize(&tropical_step(&eta_sequence(&s).unwrap()));
        assert_eq!(via_bbs, via_trop);
    }

    #[test]
    fn rotation_examples() {
        let a = tr(&[2, 1], &[1, 6]);
        assert_eq!(equal_mod_sigma(&a, &a.rotate(2)), Some(0));
        assert_eq!(equal_mod_sigma(&a, &tr(&[1, 2], &[6, 1])), Some(1));
        assert_eq!(equal_mod_sigma(&a, &tr(&[1, 1], &[2, 6])), None);
        let b = tr(&[1, 2, 1], &[2, 7, 1]);
        assert_eq!(equal_mod_sigma(&b, &b.rotate(2)), Some(2));
        assert_eq!(cyclic_canonicalize(&b), cyclic_canonicalize(&b.rotate(1)));
    }

    #[test]
    fn lift_and_valuations() {
        let s = tr(&[2, 1], &[1, 6]);
        let lifted = t_lift(&s).unwrap();
        assert_eq!(lifted.i_values()[0], RationalFunction::t_pow(2));
        assert_eq!(lifted.v_values()[1], RationalFunction::t_pow(6));
        assert_eq!(tropicalize(&lifted).unwrap(), s);
        assert_eq!(
            tropicalize(&toda_step(&lifted).unwrap()).unwrap(),
            tr(&[1, 2], &[1, 6])
        );
        let ones = t_lift(&tr(&[0, 0], &[0, 0])).unwrap();
        assert!(ones
            .i_values()
            .iter()
            .all(|x| *x == RationalFunction::one()));

        let three = tr(&[2, 1, 1], &[1, 2, 7]);
        let stepped = tropicalize(&toda_step(&t_lift(&three).unwrap()).unwrap()).unwrap();
        assert_eq!(stepped, tropical_step(&three));
        assert_eq!(stepped, tr(&[1, 2, 1], &[1, 1, 8]));
    }

    #[test]
    fn negative_valuations_are_rejected() {
        let s = TodaState::new(
            vec![RationalFunction::t_pow(-1), RationalFunction::one()],
            vec![RationalFunction::one(), RationalFunction::one()],
        )
        .unwrap();
        assert!(matches!(
            tropicalize(&s),
            Err(BoxBallError::NegativeValuation {
                index: 1,
                value: -1
            })
        ));
    }

    #[test]
    fn enumeration_counts() {
        // states of length 4 with at most one ball
        assert_eq!(BoxBallState::enumerate(4).count(), 5);
        assert_eq!(bb("0110000").canonical_rotation(), bb("0000011"));
    }
}
