//! Helpers on exact fractions: floor/ceil/fractional part, the nearest-integer
//! map with its tie rule, distance to the nearest integer, and the canonical
//! "num/den" string form used by the wire format.
//!
//! Tie rule: when `{x} = 1/2` the nearest integer is `floor(x)`, uniformly for
//! negative half-integers as well, so `nearest(-5/2) = -3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest integer `<= x`.
pub fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer `>= x`.
pub fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Fractional part `{x} = x - floor(x)` in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - BigRational::from_integer(floor(x))
}

/// Nearest integer with the tie rule `{x} = 1/2 -> floor(x)`.
///
/// Equivalent to `ceil(x - 1/2)`, which reproduces the tie rule exactly.
pub fn nearest(x: &BigRational) -> BigInt {
    let half = rat(1, 2);
    ceil(&(x - half))
}

/// Distance to the nearest integer, in `[0, 1/2]`.
pub fn dist_to_nearest(x: &BigRational) -> BigRational {
    let f = frac(x);
    let one_minus = BigRational::one() - &f;
    if f <= one_minus {
        f
    } else {
        one_minus
    }
}

/// Canonical `"num/den"` string (reduced, positive denominator).
pub fn to_canonical_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"a/b"`, `"a"`, or a leading-sign variant thereof. No decimals:
/// every mathematical input stays exact.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("expected exact rational \"a/b\" or integer, got {s:?}"));
    if s.is_empty() {
        return Err(err());
    }
    if s.contains('.') {
        return Err(Error::Parse(format!(
            "decimal literals are not accepted (got {s:?}); use an exact fraction a/b"
        )));
    }
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
    match parts.next() {
        None => Ok(BigRational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| err())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// `x^n` for integer `n` (negative allowed when `x != 0`).
pub fn pow_i64(x: &BigRational, n: i64) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let mut base = if n < 0 { x.recip() } else { x.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Absolute value.
pub fn abs(x: &BigRational) -> BigRational {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_tie_rule() {
        // Definition: ties resolve to the floor, also at negative half-integers.
        assert_eq!(nearest(&rat(5, 2)), big(2));
        assert_eq!(nearest(&rat(-5, 2)), big(-3));
        assert_eq!(nearest(&rat(7, 3)), big(2));
        assert_eq!(nearest(&rat(12, 5)), big(2));
        assert_eq!(nearest(&rat(13, 5)), big(3));
        assert_eq!(nearest(&rat_int(4)), big(4));
    }

    #[test]
    fn dist_values() {
        assert_eq!(dist_to_nearest(&rat(7, 3)), rat(1, 3));
        assert_eq!(dist_to_nearest(&rat(5, 2)), rat(1, 2));
        assert_eq!(dist_to_nearest(&rat_int(-3)), rat_int(0));
        assert_eq!(dist_to_nearest(&rat(-7, 3)), rat(1, 3));
    }

    #[test]
    fn floor_frac_basic() {
        assert_eq!(floor(&rat(-1, 2)), big(-1));
        assert_eq!(frac(&rat(-1, 2)), rat(1, 2));
        assert_eq!(floor(&rat(9, 4)), big(2));
    }

    #[test]
    fn parse_and_canonical() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("17").unwrap(), rat_int(17));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(to_canonical_string(&rat(-6, 8)), "-3/4");
        assert_eq!(to_canonical_string(&rat_int(5)), "5/1");
    }
}
