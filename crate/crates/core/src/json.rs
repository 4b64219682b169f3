//! Exact JSON rendering of arbitrary-precision numbers.
//!
//! Integers are written as bare JSON numbers of any length; rationals that
//! are not integers are written as `"a/b"` strings.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

use crate::error::{Error, Result};

pub fn int_value(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integer is a JSON number"))
}

pub fn uint_value(x: &BigUint) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integer is a JSON number"))
}

/// Integers as numbers, everything else as an `"a/b"` string.
pub fn rational_value(x: &BigRational) -> Value {
    if x.is_integer() {
        int_value(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(Error::Parse(format!("expected an integer, got {other}"))),
    };
    BigInt::from_str(&text).map_err(|_| Error::Parse(format!("not an integer: {text}")))
}

pub fn parse_uint(v: &Value) -> Result<BigUint> {
    let x = parse_int(v)?;
    x.to_biguint()
        .ok_or_else(|| Error::Parse(format!("expected a nonnegative integer, got {x}")))
}

/// Accepts integers, `"a/b"` strings and integral strings.
pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(_) => Ok(BigRational::from_integer(parse_int(v)?)),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s, "1"),
            };
            let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

/// `serde(with = ...)` adapter writing a `BigUint` as a bare JSON number.
pub mod biguint_number {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        uint_value(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        let v = Value::deserialize(d)?;
        parse_uint(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_stay_exact() {
        let x: BigInt = "-123456789012345678901234567890".parse().unwrap();
        let v = int_value(&x);
        assert_eq!(serde_json::to_string(&v).unwrap(), "-123456789012345678901234567890");
        let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(parse_int(&back).unwrap(), x);
    }

    #[test]
    fn rationals() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(rational_value(&half), Value::String("1/2".into()));
        assert_eq!(parse_rational(&Value::String("-3/6".into())).unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(&serde_json::json!(4)).unwrap(), BigRational::from_integer(4.into()));
        assert!(parse_rational(&Value::String("1/0".into())).is_err());
        assert!(parse_uint(&serde_json::json!(-1)).is_err());
    }
}
