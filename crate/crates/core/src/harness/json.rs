//! JSON encodings of states, curves and divisors.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::encoding::{poly_from_json, poly_to_json};
use crate::algebra::{EncodingError, FieldTag, JsonScalar, Rational, RationalFunction};
use crate::boxball::{BoxBallState, TropicalState};
use crate::jacobian::{HyperellipticCurve, MumfordDivisor};
use crate::toda::{SpectralCurve, TodaState};

use super::HarnessError;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, HarnessError> {
    v.get(key)
        .ok_or_else(|| HarnessError::BadInput(format!("missing field \"{key}\"")))
}

fn scalars<F: JsonScalar>(v: &Value) -> Result<Vec<F>, HarnessError> {
    v.as_array()
        .ok_or_else(|| HarnessError::BadInput(format!("expected an array, found {v}")))?
        .iter()
        .map(|x| F::from_json(x).map_err(HarnessError::from))
        .collect()
}

fn check_n(v: &Value, n: usize) -> Result<(), HarnessError> {
    match v.get("n") {
        None => Ok(()),
        Some(x) if x.as_u64() == Some(n as u64) => Ok(()),
        Some(x) => Err(HarnessError::BadInput(format!(
            "\"n\" is {x} but the data has {n} entries"
        ))),
    }
}

pub fn state_to_json<F: JsonScalar>(s: &TodaState<F>) -> Value {
    json!({
        "field": F::TAG.as_str(),
        "n": s.n(),
        "I": s.i_values().iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
        "V": s.v_values().iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
    })
}

pub fn state_from_json<F: JsonScalar>(v: &Value) -> Result<TodaState<F>, HarnessError> {
    if let Some(tag) = v.get("field") {
        let tag: FieldTag = tag
            .as_str()
            .ok_or_else(|| HarnessError::BadInput("\"field\" must be a string".into()))?
            .parse()?;
        if tag != F::TAG {
            return Err(EncodingError::FieldMismatch {
                expected: F::TAG,
                found: tag,
            }
            .into());
        }
    }
    let i = scalars::<F>(field(v, "I")?)?;
    let vv = scalars::<F>(field(v, "V")?)?;
    check_n(v, i.len())?;
    Ok(TodaState::new(i, vv)?)
}

/// A Toda state over whichever field its JSON declares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyState {
    Rational(TodaState<Rational>),
    Function(TodaState<RationalFunction>),
}

impl AnyState {
    pub fn from_json(v: &Value) -> Result<Self, HarnessError> {
        let tag: FieldTag = field(v, "field")?
            .as_str()
            .ok_or_else(|| HarnessError::BadInput("\"field\" must be a string".into()))?
            .parse()?;
        Ok(match tag {
            FieldTag::Rationals => AnyState::Rational(state_from_json(v)?),
            FieldTag::RationalFunctions => AnyState::Function(state_from_json(v)?),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyState::Rational(s) => state_to_json(s),
            AnyState::Function(s) => state_to_json(s),
        }
    }

    pub fn field(&self) -> FieldTag {
        match self {
            AnyState::Rational(_) => FieldTag::Rationals,
            AnyState::Function(_) => FieldTag::RationalFunctions,
        }
    }
}

pub fn curve_to_json<F: JsonScalar>(c: &SpectralCurve<F>) -> Value {
    json!({"h": poly_to_json(&c.h), "f": c.f.to_json(), "n": c.n})
}

pub fn curve_from_json<F: JsonScalar>(v: &Value) -> Result<SpectralCurve<F>, HarnessError> {
    let h = poly_from_json::<F>(field(v, "h")?)?;
    let f = F::from_json(field(v, "f")?)?;
    let n = match h.degree() {
        Some(d) if d >= 3 => d,
        _ => return Err(HarnessError::BadInput("h must have degree n >= 3".into())),
    };
    check_n(v, n)?;
    Ok(SpectralCurve { h, f, n })
}

pub fn divisor_to_json<F: JsonScalar>(e: &MumfordDivisor<F>) -> Value {
    json!({"P": poly_to_json(e.p()), "Q": poly_to_json(e.q()), "d": e.d()})
}

pub fn divisor_from_json<F: JsonScalar>(
    v: &Value,
    curve: &Arc<HyperellipticCurve<F>>,
) -> Result<MumfordDivisor<F>, HarnessError> {
    let p = poly_from_json::<F>(field(v, "P")?)?;
    let q = poly_from_json::<F>(field(v, "Q")?)?;
    let d = field(v, "d")?
        .as_i64()
        .ok_or_else(|| HarnessError::BadInput("\"d\" must be an integer".into()))?;
    Ok(MumfordDivisor::new(p, q, d, Arc::clone(curve))?)
}

pub fn tropical_to_json(t: &TropicalState) -> Value {
    json!({"n": t.n(), "Q": t.q(), "W": t.w()})
}

pub fn tropical_from_json(v: &Value) -> Result<TropicalState, HarnessError> {
    let nat = |key| -> Result<Vec<u64>, HarnessError> {
        field(v, key)?
            .as_array()
            .ok_or_else(|| HarnessError::BadInput(format!("\"{key}\" must be an array")))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .ok_or_else(|| HarnessError::BadInput(format!("{x} is not a natural number")))
            })
            .collect()
    };
    let t = TropicalState::new(nat("Q")?, nat("W")?)?;
    check_n(v, t.n())?;
    Ok(t)
}

pub fn boxball_to_json(b: &BoxBallState) -> Value {
    Value::String(b.to_string())
}

/// Accepts either a bare `"0101…"` string or `{"cells": "0101…"}`.
pub fn boxball_from_json(v: &Value) -> Result<BoxBallState, HarnessError> {
    let s = match v {
        Value::String(s) => s.as_str(),
        other => field(other, "cells")?
            .as_str()
            .ok_or_else(|| HarnessError::BadInput("\"cells\" must be a string".into()))?,
    };
    Ok(s.parse()?)
}
