use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{FieldTag, JsonScalar, Polynomial, Rational, RationalFunction};
use crate::boxball::{BoxBallState, TropicalState};
use crate::jacobian::{
    add, divisor_d_on, eigenvector_map_on, scalar_mul, torsion_generator, HyperellipticCurve,
    MumfordDivisor,
};
use crate::toda::{spectral_curve, toda_step, TodaState};

use super::json::{boxball_to_json, curve_to_json, divisor_to_json, AnyState};
use super::{ExperimentConfig, HarnessError, InstanceKind};

/// Attempts allowed before a generator gives up.
pub const RESAMPLE_BUDGET: usize = 1000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational(rng: &mut impl Rng, height: u64) -> Rational {
    let h = height.max(1) as i64;
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-h..=h);
    }
    let den = rng.gen_range(1..=h);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn survives<F: crate::algebra::Field>(s: &TodaState<F>, horizon: usize) -> bool {
    let mut cur = s.clone();
    for _ in 0..horizon {
        match toda_step(&cur) {
            Ok(next) => cur = next,
            Err(_) => return false,
        }
    }
    true
}

/// A state with nonzero entries `±p/q`, `p, q ≤ height`, that the flow keeps in its
/// domain for `horizon` steps.
pub fn gen_random_rational_state(
    rng: &mut impl Rng,
    n: usize,
    height: u64,
    horizon: usize,
) -> Result<TodaState<Rational>, HarnessError> {
    if n < 2 {
        return Err(HarnessError::BadInput("need n >= 2".into()));
    }
    for _ in 0..RESAMPLE_BUDGET {
        let i = (0..n).map(|_| random_rational(rng, height)).collect();
        let v = (0..n).map(|_| random_rational(rng, height)).collect();
        let s = TodaState::new(i, v)?;
        if survives(&s, horizon) {
            return Ok(s);
        }
    }
    Err(HarnessError::ResampleBudget(RESAMPLE_BUDGET))
}

/// A state over Q(T) with entries `c·T^e`, `c` a random rational and `0 ≤ e ≤ 3`.
pub fn gen_random_function_state(
    rng: &mut impl Rng,
    n: usize,
    height: u64,
    horizon: usize,
) -> Result<TodaState<RationalFunction>, HarnessError> {
    if n < 2 {
        return Err(HarnessError::BadInput("need n >= 2".into()));
    }
    fn entry(rng: &mut impl Rng, height: u64) -> RationalFunction {
        let c = random_rational(rng, height);
        let e = rng.gen_range(0..=3usize);
        RationalFunction::from_poly(Polynomial::monomial(c, e))
    }
    for _ in 0..RESAMPLE_BUDGET {
        let i = (0..n).map(|_| entry(rng, height)).collect();
        let v = (0..n).map(|_| entry(rng, height)).collect();
        let s = TodaState::new(i, v)?;
        if survives(&s, horizon) {
            return Ok(s);
        }
    }
    Err(HarnessError::ResampleBudget(RESAMPLE_BUDGET))
}

/// Random `(Q, W)` with entries in `0..=max_entry` and `ΣQ < ΣW`.
pub fn gen_random_tropical(
    rng: &mut impl Rng,
    n: usize,
    max_entry: u64,
) -> Result<TropicalState, HarnessError> {
    if n == 0 || max_entry == 0 {
        return Err(HarnessError::BadInput(
            "need n >= 1 and a positive bound".into(),
        ));
    }
    for _ in 0..RESAMPLE_BUDGET {
        let q: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
        if q.iter().sum::<u64>() < w.iter().sum::<u64>() {
            return Ok(TropicalState::new(q, w)?);
        }
    }
    Err(HarnessError::ResampleBudget(RESAMPLE_BUDGET))
}

/// Split `total` into `parts` positive summands, uniformly over compositions.
fn composition(rng: &mut impl Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = sample(rng, total - 1, parts - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let part = c - prev;
            prev = c;
            part
        })
        .collect()
}

/// A box-ball state with `boxes` boxes and exactly `solitons` blocks of balls, randomly rotated.
pub fn gen_random_boxball(
    rng: &mut impl Rng,
    boxes: usize,
    solitons: usize,
) -> Result<BoxBallState, HarnessError> {
    let max_balls = (boxes.saturating_sub(1) / 2).min(boxes.saturating_sub(solitons));
    if solitons == 0 || solitons > max_balls {
        return Err(HarnessError::BadInput(format!(
            "cannot place {solitons} solitons in {boxes} boxes below half density"
        )));
    }
    let balls = rng.gen_range(solitons..=max_balls);
    let q = composition(rng, balls, solitons);
    let w = composition(rng, boxes - balls, solitons);
    let mut cells = Vec::with_capacity(boxes);
    for (a, b) in q.into_iter().zip(w) {
        cells.extend(std::iter::repeat_n(true, a));
        cells.extend(std::iter::repeat_n(false, b));
    }
    let offset = rng.gen_range(0..boxes);
    Ok(BoxBallState::new(cells)?.rotate(offset))
}

/// `Σ cᵢ ⊡ basisᵢ` with each `cᵢ` uniform in `−bound..=bound`.
pub fn gen_random_divisor<F: JsonScalar>(
    rng: &mut impl Rng,
    basis: &[MumfordDivisor<F>],
    bound: i64,
) -> Result<MumfordDivisor<F>, HarnessError> {
    let curve = basis
        .first()
        .ok_or_else(|| HarnessError::BadInput("empty divisor basis".into()))?
        .curve();
    let mut acc = MumfordDivisor::zero(Arc::clone(curve));
    for b in basis {
        let c = rng.gen_range(-bound..=bound);
        acc = add(&acc, &scalar_mul(c, b)?)?;
    }
    Ok(acc)
}

/// Basis `Ψ(s), D, ([1,0],2)` of divisors attached to a state.
fn divisor_basis<F: JsonScalar>(s: &TodaState<F>) -> Result<Vec<MumfordDivisor<F>>, HarnessError> {
    let curve = Arc::new(HyperellipticCurve::from_spectral(&spectral_curve(s)?)?);
    Ok(vec![
        eigenvector_map_on(s, &curve)?,
        divisor_d_on(s, &curve)?,
        torsion_generator(&curve),
    ])
}

/// A spectral curve and two divisors drawn from the subgroup spanned by `Ψ(s)`, `D` and
/// `([1,0],2)` for a random state `s`.
fn gen_divisor_instance<F: JsonScalar>(
    rng: &mut impl Rng,
    mut state: impl FnMut(&mut ChaCha8Rng) -> Result<TodaState<F>, HarnessError>,
    rng_seed: u64,
) -> Result<Value, HarnessError> {
    let mut inner = rng_from_seed(rng_seed);
    for _ in 0..RESAMPLE_BUDGET {
        let s = state(&mut inner)?;
        let Ok(basis) = divisor_basis(&s) else {
            continue;
        };
        let a = gen_random_divisor(rng, &basis, 3)?;
        let b = gen_random_divisor(rng, &basis, 3)?;
        return Ok(json!({
            "field": F::TAG.as_str(),
            "curve": curve_to_json(&spectral_curve(&s)?),
            "a": divisor_to_json(&a),
            "b": divisor_to_json(&b),
        }));
    }
    Err(HarnessError::ResampleBudget(RESAMPLE_BUDGET))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RandomInstance {
    Toda(AnyState),
    BoxBall(BoxBallState),
    /// `{"field", "curve", "a", "b"}`.
    Divisors(Value),
}

impl RandomInstance {
    pub fn to_json(&self) -> Value {
        match self {
            RandomInstance::Toda(s) => s.to_json(),
            RandomInstance::BoxBall(b) => boxball_to_json(b),
            RandomInstance::Divisors(v) => v.clone(),
        }
    }
}

/// Deterministic instance of the configured kind over the configured field.
pub fn gen_random_instance(cfg: &ExperimentConfig) -> Result<RandomInstance, HarnessError> {
    let mut rng = rng_from_seed(cfg.seed);
    let horizon = cfg.steps.max(1);
    let (n, height) = (cfg.n, cfg.height);
    match (cfg.kind, cfg.field) {
        (InstanceKind::BoxBall, _) => {
            gen_random_boxball(&mut rng, cfg.boxes, cfg.solitons).map(RandomInstance::BoxBall)
        }
        (InstanceKind::Toda, FieldTag::Rationals) => Ok(RandomInstance::Toda(AnyState::Rational(
            gen_random_rational_state(&mut rng, n, height, horizon)?,
        ))),
        (InstanceKind::Toda, FieldTag::RationalFunctions) => Ok(RandomInstance::Toda(
            AnyState::Function(gen_random_function_state(&mut rng, n, height, horizon)?),
        )),
        (InstanceKind::Divisors, field) => {
            let seed = rng.gen();
            let v = match field {
                FieldTag::Rationals => gen_divisor_instance(
                    &mut rng,
                    |r| gen_random_rational_state(r, n, height, 0),
                    seed,
                )?,
                FieldTag::RationalFunctions => gen_divisor_instance(
                    &mut rng,
                    |r| gen_random_function_state(r, n, height, 0),
                    seed,
                )?,
            };
            Ok(RandomInstance::Divisors(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Mode;

    #[test]
    fn same_seed_same_instance() {
        let mut cfg = ExperimentConfig::new(Mode::VerifyTranslation);
        cfg.seed = 1;
        cfg.height = 9;
        let a = gen_random_instance(&cfg).unwrap();
        assert_eq!(a, gen_random_instance(&cfg).unwrap());
        match a {
            RandomInstance::Toda(AnyState::Rational(s)) => {
                assert_eq!(s.n(), 3);
                assert!(toda_step(&s).is_ok());
            }
            other => panic!("unexpected {other:?}"),
        }
        cfg.seed = 2;
        assert_ne!(
            gen_random_instance(&cfg).unwrap(),
            gen_random_instance(&ExperimentConfig {
                seed: 1,
                ..cfg.clone()
            })
            .unwrap()
        );
    }

    #[test]
    fn boxball_generation_respects_bounds() {
        let mut rng = rng_from_seed(7);
        for _ in 0..50 {
            let b = gen_random_boxball(&mut rng, 20, 3).unwrap();
            assert_eq!(b.len(), 20);
            assert_eq!(b.solitons(), 3);
            assert!(2 * b.balls() < 20);
        }
        assert!(gen_random_boxball(&mut rng, 10, 5).is_err());
        assert!(BoxBallState::new("1111110000".chars().map(|c| c == '1').collect()).is_err());
    }

    #[test]
    fn tropical_generation() {
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let t = gen_random_tropical(&mut rng, 4, 8).unwrap();
            assert!(t.q().iter().sum::<u64>() < t.w().iter().sum::<u64>());
            assert!(t.q().iter().chain(t.w()).all(|&x| x <= 8));
        }
    }
}
