//! JSON encodings of scalars and polynomials.
//!
//! Rationals are strings `"p/q"` (or `"p"` when `q = 1`), polynomials are arrays of
//! scalar encodings in ascending degree, and elements of Q(T) are objects
//! `{"num": [...], "den": [...]}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::field::{Field, Rational};
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::EncodingError;

/// Which exact field a computation runs over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldTag {
    Rationals,
    RationalFunctions,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Rationals => "Q",
            FieldTag::RationalFunctions => "Q(T)",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldTag {
    type Err = EncodingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" => Ok(FieldTag::Rationals),
            "Q(T)" | "QT" => Ok(FieldTag::RationalFunctions),
            other => Err(EncodingError::UnknownField(other.to_string())),
        }
    }
}

/// A field element together with the field it lives in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldScalar {
    Rational(Rational),
    Function(RationalFunction),
}

impl FieldScalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldScalar::Rational(_) => FieldTag::Rationals,
            FieldScalar::Function(_) => FieldTag::RationalFunctions,
        }
    }

    /// Decode under a declared field; a value of the wrong shape is a tag mismatch.
    pub fn from_json(tag: FieldTag, v: &Value) -> Result<Self, EncodingError> {
        match tag {
            FieldTag::Rationals => Rational::from_json(v).map(FieldScalar::Rational),
            FieldTag::RationalFunctions => {
                RationalFunction::from_json(v).map(FieldScalar::Function)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FieldScalar::Rational(r) => r.to_json(),
            FieldScalar::Function(r) => r.to_json(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), EncodingError> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(EncodingError::FieldMismatch {
                expected: self.tag(),
                found: other.tag(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, EncodingError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Function(a), FieldScalar::Function(b)) => {
                FieldScalar::Function(a.clone() + b)
            }
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, EncodingError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Function(a), FieldScalar::Function(b)) => {
                FieldScalar::Function(a.clone() * b)
            }
            _ => unreachable!(),
        })
    }
}

/// A field whose elements have a JSON encoding.
pub trait JsonScalar: Field {
    const TAG: FieldTag;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, EncodingError>;
}

fn parse_bigint(s: &str) -> Result<BigInt, EncodingError> {
    BigInt::from_str(s.trim()).map_err(|_| EncodingError::BadRational(s.to_string()))
}

pub fn parse_rational(s: &str) -> Result<Rational, EncodingError> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_bigint(q)?;
            if q == BigInt::from(0) {
                return Err(EncodingError::BadRational(s.to_string()));
            }
            Ok(Rational::new(parse_bigint(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_bigint(s)?)),
    }
}

impl JsonScalar for Rational {
    const TAG: FieldTag = FieldTag::Rationals;

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self, EncodingError> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_i64(n.as_i64().unwrap())),
            other => Err(EncodingError::Shape(format!(
                "expected a rational string, found {other}"
            ))),
        }
    }
}

impl JsonScalar for RationalFunction {
    const TAG: FieldTag = FieldTag::RationalFunctions;

    fn to_json(&self) -> Value {
        json!({
            "num": poly_to_json(self.num()),
            "den": poly_to_json(self.den()),
        })
    }

    fn from_json(v: &Value) -> Result<Self, EncodingError> {
        let obj = v.as_object().ok_or_else(|| {
            EncodingError::Shape(format!("expected {{\"num\",\"den\"}}, found {v}"))
        })?;
        let part = |key: &str| -> Result<Polynomial<Rational>, EncodingError> {
            let p = obj
                .get(key)
                .ok_or_else(|| EncodingError::Shape(format!("missing \"{key}\"")))?;
            poly_from_json(p)
        };
        RationalFunction::new(part("num")?, part("den")?).map_err(EncodingError::Algebra)
    }
}

pub fn poly_to_json<F: JsonScalar>(p: &Polynomial<F>) -> Value {
    Value::Array(p.coeffs().iter().map(JsonScalar::to_json).collect())
}

pub fn poly_from_json<F: JsonScalar>(v: &Value) -> Result<Polynomial<F>, EncodingError> {
    let arr = v
        .as_array()
        .ok_or_else(|| EncodingError::Shape(format!("expected a coefficient array, found {v}")))?;
    arr.iter()
        .map(F::from_json)
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::new)
}
