//! Serde helpers for the JSON wire format: big integers as decimal strings,
//! rationals as canonical "num/den" strings. Lossless and deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn ser_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&super::rational::to_canonical_string(x))
}

pub fn ser_rational_vec<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&super::rational::to_canonical_string(x))?;
    }
    seq.end()
}

pub fn ser_bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn ser_opt_rational<S: Serializer>(
    x: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match x {
        Some(r) => ser_rational(r, s),
        None => s.serialize_none(),
    }
}
