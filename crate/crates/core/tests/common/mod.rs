//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use toda_gauss::algebra::{Field, Polynomial, Rational};
use toda_gauss::harness::{gen_random_rational_state, rng_from_seed};
use toda_gauss::toda::TodaState;

pub type Poly = Polynomial<Rational>;

pub fn worked() -> TodaState<Rational> {
    TodaState::from_i64s(&[1, 2, 3], &[4, 5, 6]).unwrap()
}

pub fn odd_genus() -> TodaState<Rational> {
    TodaState::from_i64s(&[1, 2, 3, 4], &[5, 6, 7, 8]).unwrap()
}

/// `count` seeded states with `n` cycling through `ns`, each surviving `horizon` steps.
pub fn random_states(
    seed: u64,
    count: usize,
    ns: &[usize],
    horizon: usize,
) -> Vec<TodaState<Rational>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|k| gen_random_rational_state(&mut rng, ns[k % ns.len()], 16, horizon).unwrap())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &laplace_det(&minor);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

fn konst(c: &Rational) -> Poly {
    Poly::constant(c.clone())
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + a[i][k].clone() * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `M R − x E` and `R M − x E` with the spectral parameter set to `z`.
pub fn lax_at(s: &TodaState<Rational>, z: &Rational) -> (Vec<Vec<Poly>>, Vec<Vec<Poly>>) {
    let n = s.n();
    let mut m = vec![vec![Rational::zero(); n]; n];
    let mut r = vec![vec![Rational::zero(); n]; n];
    for j in 0..n {
        m[j][j] = Rational::one();
        r[j][j] = s.i_values()[j].clone();
        if j + 1 < n {
            m[j + 1][j] = s.v_values()[j].clone();
            r[j][j + 1] = Rational::one();
        }
    }
    m[0][n - 1] = s.v_values()[n - 1].clone() * &z.inv().unwrap();
    r[n - 1][0] = z.clone();
    let shift = |a: Vec<Vec<Rational>>| -> Vec<Vec<Poly>> {
        a.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| {
                        if i == j {
                            &konst(e) - &Poly::x()
                        } else {
                            konst(e)
                        }
                    })
                    .collect()
            })
            .collect()
    };
    (shift(mat_mul(&m, &r)), shift(mat_mul(&r, &m)))
}

/// Rows and columns `k+1 ..= n−l` (1-based).
pub fn trimmed(m: &[Vec<Poly>], k: usize, l: usize) -> Vec<Vec<Poly>> {
    let n = m.len();
    m[k..n - l]
        .iter()
        .map(|row| row[k..n - l].to_vec())
        .collect()
}

/// One box-ball step by an unbounded carrier swept twice around the ring; the second
/// sweep starts with the periodic carrier load.
pub fn carrier_step(cells: &[bool]) -> Vec<bool> {
    let n = cells.len();
    let mut load = 0usize;
    for &c in cells {
        if c {
            load += 1;
        } else {
            load = load.saturating_sub(1);
        }
    }
    let mut out = Vec::with_capacity(n);
    for &c in cells {
        if c {
            load += 1;
            out.push(false);
        } else if load > 0 {
            load -= 1;
            out.push(true);
        } else {
            out.push(false);
        }
    }
    out
}

pub fn cells(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}
