//! JSON documents emitted and accepted by the command line.
//!
//! Witt vectors are `{"precision": N, "coeffs": ["a1", .., "aN"]}` with the
//! constant term implicit. A nested vector uses the same object for each
//! coefficient. Integers are decimal strings on output; plain JSON numbers
//! are also accepted on input.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::arithgeom::{int_list, RationalFunction};
use crate::error::{Error, Result};
use crate::ringcore::{GhostRing, IntPolynomial, Integer};
use crate::witt::{GhostVector, WittVector};

/// Coefficient rings with a JSON form.
pub trait JsonCoeff: GhostRing {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for Integer {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}"))),
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .or_else(|| n.as_u64().map(BigInt::from))
                .ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
            other => Err(Error::Parse(format!("expected an integer, got {other}"))),
        }
    }
}

impl<A: JsonCoeff> JsonCoeff for WittVector<A> {
    fn to_json(&self) -> Value {
        json!({
            "precision": self.precision(),
            "coeffs": self.tail().iter().map(A::to_json).collect::<Vec<_>>(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected a Witt vector object, got {v}")))?;
        if let Some(k) = obj.keys().find(|k| *k != "precision" && *k != "coeffs") {
            return Err(Error::Parse(format!("unknown field {k:?} in Witt vector")));
        }
        let precision = obj
            .get("precision")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("Witt vector needs a nonnegative \"precision\"".into()))?
            as usize;
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("Witt vector needs a \"coeffs\" array".into()))?;
        if coeffs.len() != precision {
            return Err(Error::Parse(format!(
                "precision {precision} but {} coefficients",
                coeffs.len()
            )));
        }
        if precision == 0 {
            return Err(Error::Parse("Witt vectors need precision >= 1".into()));
        }
        let tail = coeffs.iter().map(A::from_json).collect::<Result<Vec<_>>>()?;
        let one = tail[0].one_like();
        WittVector::from_tail(one, tail)
    }
}

/// Ghost coordinates as a JSON array.
pub fn ghost_to_json<A: JsonCoeff>(g: &GhostVector<A>) -> Value {
    Value::Array(g.coords().iter().map(A::to_json).collect())
}

pub fn ghost_from_json<A: JsonCoeff>(v: &Value) -> Result<GhostVector<A>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a JSON array of ghost coordinates, got {v}")))?;
    GhostVector::new(arr.iter().map(A::from_json).collect::<Result<_>>()?)
        .map_err(|e| Error::Parse(e.to_string()))
}

/// Nesting depth of a Witt document: 1 for `W(Z)`, 2 for `W(W(Z))`, ..
pub fn witt_depth(v: &Value) -> usize {
    match v.get("coeffs").and_then(Value::as_array).and_then(|c| c.first()) {
        Some(inner @ Value::Object(_)) => 1 + witt_depth(inner),
        _ => 1,
    }
}

/// `{"num": [..], "den": [..], "factored": ".."}`, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDoc {
    #[serde(with = "int_list")]
    pub num: Vec<Integer>,
    #[serde(with = "int_list")]
    pub den: Vec<Integer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<String>,
}

impl From<&RationalFunction> for RationalDoc {
    fn from(rf: &RationalFunction) -> Self {
        let padded = |p: &IntPolynomial| {
            if p.coeffs().is_empty() {
                vec![BigInt::one()]
            } else {
                p.coeffs().to_vec()
            }
        };
        RationalDoc {
            num: padded(&rf.num),
            den: padded(&rf.den),
            factored: rf.factored(),
        }
    }
}

impl RationalDoc {
    pub fn to_rational(&self) -> Result<RationalFunction> {
        RationalFunction::new(
            IntPolynomial::new(self.num.clone()),
            IntPolynomial::new(self.den.clone()),
        )
    }
}

/// Error object written to stderr on failure.
pub fn error_object(code: i32, kind: &str, message: &str) -> Value {
    let mut inner = Map::new();
    inner.insert("code".into(), json!(code));
    inner.insert("kind".into(), json!(kind));
    inner.insert("message".into(), json!(message));
    json!({ "error": inner })
}
