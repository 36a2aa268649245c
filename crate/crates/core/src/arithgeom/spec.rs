//! Variety descriptions and their point counts.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ringcore::field::{is_prime, prime_power};
use crate::ringcore::{Integer, PolySystem};

/// A variety over `F_q`, described well enough to produce `N_r = #X(F_{q^r})`.
///
/// The serde form is the tagged JSON document used on the command line,
/// e.g. `{"type":"projective","dim":2,"q":4}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum VarietySpec {
    /// Affine space `A^dim`.
    Affine { dim: u32, q: u64 },
    /// Projective space `P^dim`.
    Projective { dim: u32, q: u64 },
    /// The projective curve `y^2 = x^3 + a x + b` over `F_p`, `p > 3`.
    Elliptic { p: u64, a: i64, b: i64 },
    /// Fibre product over a common `F_q`.
    Product { factors: Vec<VarietySpec> },
    /// Point counts supplied directly, `counts[r - 1] = N_r`.
    Counts {
        q: u64,
        #[serde(with = "int_list")]
        counts: Vec<Integer>,
    },
    /// The affine variety cut out by `polys` in the named variables over `F_p`.
    Equations {
        p: u64,
        vars: Vec<String>,
        polys: Vec<String>,
    },
}

impl VarietySpec {
    pub fn affine(dim: u32, q: u64) -> Self {
        VarietySpec::Affine { dim, q }
    }

    pub fn projective(dim: u32, q: u64) -> Self {
        VarietySpec::Projective { dim, q }
    }

    /// An elliptic curve, checked for nonsingularity.
    pub fn elliptic(p: u64, a: i64, b: i64) -> Result<Self> {
        let spec = VarietySpec::Elliptic { p, a, b };
        spec.validate()?;
        Ok(spec)
    }

    pub fn product(factors: Vec<VarietySpec>) -> Result<Self> {
        let spec = VarietySpec::Product { factors };
        spec.validate()?;
        Ok(spec)
    }

    pub fn equations(p: u64, vars: &[&str], polys: &[&str]) -> Result<Self> {
        let spec = VarietySpec::Equations {
            p,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            polys: polys.iter().map(|s| s.to_string()).collect(),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Size of the base field.
    pub fn q(&self) -> u64 {
        match self {
            VarietySpec::Affine { q, .. }
            | VarietySpec::Projective { q, .. }
            | VarietySpec::Counts { q, .. } => *q,
            VarietySpec::Elliptic { p, .. } | VarietySpec::Equations { p, .. } => *p,
            VarietySpec::Product { factors } => factors.first().map_or(0, VarietySpec::q),
        }
    }

    /// Checks every construction invariant; deserialized specs go through
    /// this before use.
    pub fn validate(&self) -> Result<()> {
        let require_prime_power = |q: u64| {
            prime_power(q)
                .map(|_| ())
                .ok_or_else(|| Error::InvalidSpec(format!("q = {q} is not a prime power")))
        };
        match self {
            VarietySpec::Affine { q, .. } | VarietySpec::Projective { q, .. } => {
                require_prime_power(*q)
            }
            VarietySpec::Elliptic { p, a, b } => {
                if *p <= 3 || !is_prime(*p) {
                    return Err(Error::InvalidSpec(format!(
                        "elliptic curves need a prime p > 3, got {p}"
                    )));
                }
                let (a, b, p) = (BigInt::from(*a), BigInt::from(*b), BigInt::from(*p));
                let disc = BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b;
                if (disc % &p).is_zero() {
                    return Err(Error::InvalidSpec(format!(
                        "y^2 = x^3 + {a}x + {b} is singular mod {p}"
                    )));
                }
                Ok(())
            }
            VarietySpec::Product { factors } => {
                let first = factors
                    .first()
                    .ok_or_else(|| Error::InvalidSpec("empty product".into()))?;
                for f in factors {
                    f.validate()?;
                    if f.q() != first.q() {
                        return Err(Error::InvalidSpec(format!(
                            "product mixes F_{} and F_{}",
                            first.q(),
                            f.q()
                        )));
                    }
                }
                Ok(())
            }
            VarietySpec::Counts { q, counts } => {
                require_prime_power(*q)?;
                if counts.is_empty() {
                    return Err(Error::InvalidSpec("counts list is empty".into()));
                }
                if counts.iter().any(Signed::is_negative) {
                    return Err(Error::InvalidSpec("point counts must be nonnegative".into()));
                }
                Ok(())
            }
            VarietySpec::Equations { .. } => self.poly_system().map(|_| ()),
        }
    }

    /// The parsed equations of an `Equations` spec.
    pub fn poly_system(&self) -> Result<PolySystem> {
        match self {
            VarietySpec::Equations { p, vars, polys } => PolySystem::parse(*p, vars, polys)
                .map_err(|e| Error::InvalidSpec(format!("equations: {e}"))),
            _ => Err(Error::InvalidSpec("not an equations spec".into())),
        }
    }
}

/// `N_1, .., N_R` for a variety over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCounts {
    pub q: u64,
    #[serde(with = "int_list")]
    pub counts: Vec<Integer>,
}

impl PointCounts {
    pub fn new(q: u64, counts: Vec<Integer>) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::InvalidSpec(format!("q = {q} is not a prime power")));
        }
        if counts.iter().any(Signed::is_negative) {
            return Err(Error::InvalidSpec("point counts must be nonnegative".into()));
        }
        Ok(PointCounts { q, counts })
    }

    pub fn from_i64s(q: u64, counts: &[i64]) -> Result<Self> {
        Self::new(q, counts.iter().map(|&n| BigInt::from(n)).collect())
    }

    /// The point `Spec F_q`: `N_r = 1` for all `r`.
    pub fn point(q: u64, range: usize) -> Self {
        PointCounts {
            q,
            counts: vec![BigInt::from(1); range],
        }
    }

    pub fn range(&self) -> usize {
        self.counts.len()
    }

    /// `N_r`, 1-based.
    pub fn get(&self, r: usize) -> &Integer {
        &self.counts[r - 1]
    }

    pub(crate) fn require_range(&self, what: &str, needed: usize) -> Result<()> {
        if self.range() < needed {
            return Err(Error::precision(what, needed, self.range()));
        }
        Ok(())
    }
}

/// Integers as decimal strings on output; numbers or strings on input.
pub(crate) mod int_list {
    use super::Integer;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|n| n.to_string()))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum IntLike {
        Num(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Integer>, D::Error> {
        let raw = Vec::<IntLike>::deserialize(d)?;
        raw.into_iter()
            .map(|x| match x {
                IntLike::Num(n) => Ok(Integer::from(n)),
                IntLike::Str(s) => s
                    .trim()
                    .parse::<Integer>()
                    .map_err(|e| D::Error::custom(format!("bad integer {s:?}: {e}"))),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_singular_curves() {
        // 4a^3 + 27b^2 = 0 for a = -3, b = 2
        assert!(VarietySpec::elliptic(7, -3, 2).is_err());
        assert!(VarietySpec::elliptic(3, 1, 1).is_err());
        assert!(VarietySpec::elliptic(5, 1, 0).is_ok());
    }

    #[test]
    fn products_share_the_base_field() {
        let e = VarietySpec::elliptic(5, 1, 0).unwrap();
        assert!(VarietySpec::product(vec![e.clone(), VarietySpec::affine(1, 5)]).is_ok());
        assert!(VarietySpec::product(vec![e, VarietySpec::affine(1, 7)]).is_err());
        assert!(VarietySpec::product(vec![]).is_err());
    }

    #[test]
    fn counts_validation() {
        let bad = VarietySpec::Counts {
            q: 6,
            counts: vec![BigInt::from(1)],
        };
        assert!(bad.validate().is_err());
        let empty = VarietySpec::Counts {
            q: 4,
            counts: vec![],
        };
        assert!(empty.validate().is_err());
    }

    #[test]
    fn json_schema() {
        let s: VarietySpec =
            serde_json::from_str(r#"{"type":"projective","dim":1,"q":2}"#).unwrap();
        assert_eq!(s, VarietySpec::projective(1, 2));
        let s: VarietySpec =
            serde_json::from_str(r#"{"type":"counts","q":3,"counts":[4,"10"]}"#).unwrap();
        assert_eq!(
            s,
            VarietySpec::Counts {
                q: 3,
                counts: vec![BigInt::from(4), BigInt::from(10)]
            }
        );
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"type":"counts","q":3,"counts":["4","10"]}"#);
        let s: VarietySpec = serde_json::from_str(
            r#"{"type":"equations","p":5,"vars":["x","y"],"polys":["y^2 - x^3 - x"]}"#,
        )
        .unwrap();
        assert!(s.validate().is_ok());
        assert!(serde_json::from_str::<VarietySpec>(r#"{"type":"sphere","q":2}"#).is_err());
    }
}
