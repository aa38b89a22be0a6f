use std::sync::Arc;

use serde_json::Value;

use crate::algebra::{FieldTag, JsonScalar, Rational, RationalFunction};
use crate::jacobian::HyperellipticCurve;
use crate::toda::TodaState;

use super::json::{
    boxball_from_json, curve_from_json, divisor_from_json, state_from_json, AnyState,
};
use super::{
    bbs_run, gen_random_instance, jac_add, toda_run, verify_bbs_diagram, verify_torsion,
    verify_translation, ExperimentConfig, HarnessError, Mode, TraceRecord, SCHEMA,
};

/// The field an instance declares, falling back to the configured one.
fn field_of(v: &Value, fallback: FieldTag) -> Result<FieldTag, HarnessError> {
    match v.get("field") {
        None => Ok(fallback),
        Some(tag) => Ok(tag
            .as_str()
            .ok_or_else(|| HarnessError::BadInput("\"field\" must be a string".into()))?
            .parse()?),
    }
}

fn toda_state(v: &Value, field: FieldTag) -> Result<AnyState, HarnessError> {
    Ok(match field_of(v, field)? {
        FieldTag::Rationals => AnyState::Rational(state_from_json(v)?),
        FieldTag::RationalFunctions => AnyState::Function(state_from_json(v)?),
    })
}

fn jac_add_instance<F: JsonScalar>(v: &Value) -> Result<TraceRecord, HarnessError> {
    let part = |key: &str| {
        v.get(key)
            .ok_or_else(|| HarnessError::BadInput(format!("missing field \"{key}\"")))
    };
    let curve = Arc::new(HyperellipticCurve::from_spectral(&curve_from_json::<F>(
        part("curve")?,
    )?)?);
    let a = divisor_from_json(part("a")?, &curve)?;
    let b = divisor_from_json(part("b")?, &curve)?;
    Ok(jac_add(&a, &b))
}

fn on_state<R>(
    s: &AnyState,
    q: impl FnOnce(&TodaState<Rational>) -> R,
    qt: impl FnOnce(&TodaState<RationalFunction>) -> R,
) -> R {
    match s {
        AnyState::Rational(s) => q(s),
        AnyState::Function(s) => qt(s),
    }
}

/// Execute one configured run. `input` is an instance, or a trace whose input is replayed;
/// without it the instance is generated from the seed.
///
/// Errors are reserved for unusable input; failed or interrupted checks are recorded in
/// the returned trace.
pub fn run(cfg: &ExperimentConfig, input: Option<&Value>) -> Result<TraceRecord, HarnessError> {
    let instance = match input {
        Some(v) if v.get("schema").and_then(Value::as_str) == Some(SCHEMA) => v
            .get("input")
            .cloned()
            .ok_or_else(|| HarnessError::BadInput("trace has no \"input\"".into()))?,
        Some(v) => v.clone(),
        None => gen_random_instance(cfg)?.to_json(),
    };
    let steps = cfg.steps;
    let mut trace = match cfg.mode {
        Mode::TodaRun => {
            let s = toda_state(&instance, cfg.field)?;
            on_state(&s, |s| toda_run(s, steps), |s| toda_run(s, steps))
        }
        Mode::BbsRun => bbs_run(&boxball_from_json(&instance)?, steps),
        Mode::JacAdd => match field_of(&instance, cfg.field)? {
            FieldTag::Rationals => jac_add_instance::<Rational>(&instance)?,
            FieldTag::RationalFunctions => jac_add_instance::<RationalFunction>(&instance)?,
        },
        Mode::VerifyTranslation => {
            let s = toda_state(&instance, cfg.field)?;
            on_state(
                &s,
                |s| verify_translation(s, steps),
                |s| verify_translation(s, steps),
            )?
        }
        Mode::VerifyTorsion => {
            let s = toda_state(&instance, cfg.field)?;
            on_state(&s, verify_torsion, verify_torsion)?
        }
        Mode::VerifyBbsDiagram => verify_bbs_diagram(&boxball_from_json(&instance)?, steps)?,
        Mode::GenRandom => {
            let mut t = TraceRecord::new(Mode::GenRandom.as_str(), instance.clone());
            t.snapshots.push(instance.clone());
            t
        }
    };
    trace.input = instance;
    trace.config = Some(cfg.to_json());
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::InstanceKind;
    use serde_json::json;

    #[test]
    fn every_mode_runs_from_a_seed() {
        for mode in Mode::ALL {
            let mut cfg = ExperimentConfig::new(mode);
            cfg.seed = 3;
            cfg.steps = 2;
            let t = run(&cfg, None).unwrap();
            assert!(t.passed(), "{mode}: {:?}", t.failures().collect::<Vec<_>>());
            assert_eq!(t.mode, mode.as_str());
        }
    }

    #[test]
    fn replay_is_byte_identical() {
        let mut cfg = ExperimentConfig::new(Mode::VerifyTranslation);
        cfg.seed = 11;
        cfg.steps = 2;
        let first = run(&cfg, None).unwrap().to_json_string();
        assert_eq!(first, run(&cfg, None).unwrap().to_json_string());
        let parsed: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(run(&cfg, Some(&parsed)).unwrap().to_json_string(), first);
    }

    #[test]
    fn explicit_instances() {
        let cfg = ExperimentConfig::new(Mode::VerifyTorsion);
        let s = json!({"I": ["1", "2", "3"], "V": ["4", "5", "6"]});
        assert!(run(&cfg, Some(&s)).unwrap().passed());

        let mut cfg = ExperimentConfig::new(Mode::GenRandom);
        cfg.kind = InstanceKind::Divisors;
        let inst = run(&cfg, None).unwrap().input;
        let cfg = ExperimentConfig::new(Mode::JacAdd);
        assert!(run(&cfg, Some(&inst)).unwrap().passed());

        let bad = json!({"I": ["1", "0"], "V": ["1", "1"]});
        assert!(run(&ExperimentConfig::new(Mode::TodaRun), Some(&bad)).is_err());
    }
}
