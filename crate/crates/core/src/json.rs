//! Helpers for the JSON wire formats.
//!
//! Rationals are encoded as a `num, den` pair of JSON integers. Since
//! coefficients are arbitrary-precision, serialization goes through
//! `serde_json`'s `arbitrary_precision` number representation so that
//! round-trips preserve every bit.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{Number, Value};

use crate::error::{Error, Result};
use crate::scalar::Rat;

pub(crate) fn bigint_to_value(n: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(n.to_string()))
}

pub(crate) fn bigint_from_value(v: &Value) -> Result<BigInt> {
    let num = v
        .as_number()
        .ok_or_else(|| Error::Json(format!("expected an integer, got {v}")))?;
    num.to_string()
        .parse::<BigInt>()
        .map_err(|_| Error::Json(format!("expected an integer, got {num}")))
}

/// Encode a rational as the two-element tail `num, den` of an entry array.
pub(crate) fn rat_to_values(r: &Rat) -> (Value, Value) {
    (bigint_to_value(r.numer()), bigint_to_value(r.denom()))
}

pub(crate) fn rat_from_values(num: &Value, den: &Value) -> Result<Rat> {
    let num = bigint_from_value(num)?;
    let den = bigint_from_value(den)?;
    if den == BigInt::from(0) {
        return Err(Error::Json("zero denominator".into()));
    }
    Ok(Rat::new(num, den))
}

pub(crate) fn index_pair_from_value(v: &Value) -> Result<(usize, usize)> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Json(format!("expected an index pair, got {v}")))?;
    let read = |x: &Value| -> Result<usize> {
        x.as_u64()
            .map(|u| u as usize)
            .filter(|&u| u >= 1)
            .ok_or_else(|| Error::Json(format!("expected a 1-based index, got {x}")))
    };
    Ok((read(&arr[0])?, read(&arr[1])?))
}

pub(crate) fn index_pair_to_value(i: usize, j: usize) -> Value {
    Value::Array(vec![Value::from(i as u64), Value::from(j as u64)])
}

pub(crate) fn get_field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::Json(format!("missing field `{name}`")))
}

pub(crate) fn is_one(r: &Rat) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use std::str::FromStr;

    #[test]
    fn big_coefficients_round_trip() {
        let n = BigInt::from_str("123456789012345678901234567890").unwrap();
        let r = Rat::new(n.clone(), BigInt::from(7));
        let (num, den) = rat_to_values(&r);
        let text = serde_json::to_string(&Value::Array(vec![num, den])).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(rat_from_values(&arr[0], &arr[1]).unwrap(), r);
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        let v: Value = serde_json::from_str("1.5").unwrap();
        assert!(bigint_from_value(&v).is_err());
        assert!(rat_from_values(&Value::from(1u64), &Value::from(0u64)).is_err());
        let _ = rat(1, 1);
    }
}
