//! Exact rationals and their textual form.
//!
//! Rationals travel through JSON and the command line as strings `"p/q"` or
//! plain integers. Floats are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or an integer literal.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Canonical text: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts a JSON integer or a `"p/q"` string.
pub fn rat_from_json(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::String(s) => parse_rat(s),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(BigInt::from(u)))
            } else {
                Err(Error::Parse(format!("floating-point value {n} not allowed")))
            }
        }
        other => Err(Error::Parse(format!("expected rational, found {other}"))),
    }
}

pub fn rat_to_json(r: &Rat) -> serde_json::Value {
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::String(format_rat(r))
}

pub fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(r))
}

pub fn deserialize_rat<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
    let v = serde_json::Value::deserialize(d)?;
    rat_from_json(&v).map_err(serde::de::Error::custom)
}

/// Absolute-value ordering helper used by pivot rules.
pub(crate) fn abs_cmp(a: &BigInt, b: &BigInt) -> std::cmp::Ordering {
    a.abs().cmp(&b.abs())
}
