//! Tagged union of an exact rational and a real algebraic number. Every
//! operation returns either an exact rational or a certified enclosure of
//! requested width.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::exact::algebraic::AlgebraicReal;
use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational;
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub enum RealValue {
    Rational(#[serde(serialize_with = "crate::exact::wire::ser_rational")] BigRational),
    Algebraic(AlgebraicReal),
}

/// Result of a distance/value computation: exact for rationals, an enclosure
/// for algebraic values.
#[derive(Clone, Debug, Serialize)]
pub enum ExactOrEnclosure {
    Exact(#[serde(serialize_with = "crate::exact::wire::ser_rational")] BigRational),
    Enclosure(DyadicInterval),
}

impl ExactOrEnclosure {
    pub fn enclosure(&self, bits: u32) -> DyadicInterval {
        match self {
            ExactOrEnclosure::Exact(r) => DyadicInterval::from_rational_outward(r, bits),
            ExactOrEnclosure::Enclosure(iv) => iv.clone(),
        }
    }

    /// Certified `self <= r`.
    pub fn certainly_le_rational(&self, r: &BigRational) -> bool {
        match self {
            ExactOrEnclosure::Exact(x) => x <= r,
            ExactOrEnclosure::Enclosure(iv) => iv.hi.to_rational() <= *r,
        }
    }
}

impl RealValue {
    pub fn from_rational(r: BigRational) -> Self {
        RealValue::Rational(r)
    }

    pub fn from_algebraic(a: AlgebraicReal) -> Self {
        // degree-1 minimal polynomials collapse to the rational they encode
        match a.as_rational() {
            Some(r) => RealValue::Rational(r),
            None => RealValue::Algebraic(a),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RealValue::Rational(r) => Some(r),
            RealValue::Algebraic(_) => None,
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            RealValue::Rational(x) => x.cmp(r),
            RealValue::Algebraic(a) => a.cmp_rational(r),
        }
    }

    /// Nearest integer with the `{x} = 1/2 -> floor(x)` tie rule.
    pub fn nearest_integer(&self) -> BigInt {
        match self {
            RealValue::Rational(r) => rational::nearest(r),
            RealValue::Algebraic(a) => a.nearest(),
        }
    }

    pub fn floor(&self) -> BigInt {
        match self {
            RealValue::Rational(r) => rational::floor(r),
            RealValue::Algebraic(a) => a.floor(),
        }
    }

    /// `||x||`: exact for rationals, an enclosure of width `<= 2^-bits` otherwise.
    pub fn dist_to_nearest(&self, bits: u32) -> Result<ExactOrEnclosure> {
        Ok(match self {
            RealValue::Rational(r) => ExactOrEnclosure::Exact(rational::dist_to_nearest(r)),
            RealValue::Algebraic(a) => ExactOrEnclosure::Enclosure(a.dist_to_nearest(bits)?),
        })
    }

    /// Enclosure of `x^n`, exact-rational fast path included.
    pub fn pow_enclosure(&self, n: u32, bits: u32) -> Result<DyadicInterval> {
        Ok(match self {
            RealValue::Rational(r) => {
                let v = rational::pow_i64(r, n as i64);
                DyadicInterval::from_rational_outward(&v, bits)
            }
            RealValue::Algebraic(a) => {
                // refine enough that the interval power stays tight
                let extra = 32 + n.max(1).ilog2() * 4;
                let iv = a.refine(bits + extra)?;
                iv.pow(n)
            }
        })
    }

    /// Canonical display: "num/den" for rationals, the minimal polynomial plus
    /// isolator for algebraic values.
    pub fn describe(&self) -> String {
        match self {
            RealValue::Rational(r) => rational::to_canonical_string(r),
            RealValue::Algebraic(a) => format!(
                "root of {} in {}",
                a.minpoly(),
                a.isolator().display_decimal(6)
            ),
        }
    }
}
