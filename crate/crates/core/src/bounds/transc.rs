//! Certified enclosures of the few transcendental quantities that enter the
//! comparison lines: Euler's number `e`, natural logarithms, square roots.
//! Everything is an exact rational partial sum plus a proven tail bound,
//! rounded outward onto the dyadic grid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::rat;
use crate::polyalg::kth_root_enclosure;
use crate::{Error, Result};

/// Enclosure of `e` of width `<= 2^-bits` from the factorial series; the tail
/// past `1/K!` is below `2/(K+1)!`.
pub fn e_enclosure(bits: u32) -> DyadicInterval {
    let target = rat(1, 2).pow((bits + 2) as i32);
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut k = 1u64;
    loop {
        term /= BigRational::from_integer(BigInt::from(k));
        sum += &term;
        let tail = &term * rat(2, 1) / BigRational::from_integer(BigInt::from(k + 1));
        if tail < target {
            let hi = &sum + tail;
            return DyadicInterval::from_rational_endpoints(&sum, &hi, bits + 2);
        }
        k += 1;
    }
}

/// Enclosure of `ln x` for rational `x > 0`, width `<= 2^-bits`.
pub fn ln_enclosure(x: &BigRational, bits: u32) -> Result<DyadicInterval> {
    if !x.is_positive() {
        return Err(Error::precondition("ln needs a positive argument"));
    }
    if x.is_one() {
        return Ok(DyadicInterval::from_int(0));
    }
    if *x < BigRational::one() {
        return Ok(ln_enclosure(&x.recip(), bits)?.neg());
    }
    // range-reduce x / 2^m into [1, 2)
    let mut m = 0i64;
    let mut y = x.clone();
    let two = rat(2, 1);
    while y >= two {
        y /= &two;
        m += 1;
    }
    let inner_bits = bits + 6;
    let ln_y = atanh_series(&((&y - BigRational::one()) / (&y + BigRational::one())), inner_bits);
    let result = if m == 0 {
        ln_y
    } else {
        let ln2 = atanh_series(&rat(1, 3), inner_bits + 8);
        let scaled = ln2.mul(&DyadicInterval::from_int(m));
        scaled.add(&ln_y)
    };
    Ok(result)
}

/// Enclosure of `2 * atanh(u)` for rational `0 <= u < 1/2`.
fn atanh_series(u: &BigRational, bits: u32) -> DyadicInterval {
    debug_assert!(!u.is_negative() && *u < rat(1, 2));
    if u.is_zero() {
        return DyadicInterval::from_int(0);
    }
    let target = rat(1, 2).pow((bits + 2) as i32);
    let u2 = u * u;
    let mut sum = BigRational::zero();
    let mut upow = u.clone();
    let mut k = 0u64;
    loop {
        sum += &upow / BigRational::from_integer(BigInt::from(2 * k + 1));
        upow *= &u2;
        // tail: sum_{j>k} u^(2j+1)/(2j+1) <= u^(2k+3)/(2k+3) * 1/(1-u^2)
        let tail = &upow / BigRational::from_integer(BigInt::from(2 * k + 3))
            / (BigRational::one() - &u2);
        if tail < target {
            let lo = &sum * rat(2, 1);
            let hi = (&sum + tail) * rat(2, 1);
            return DyadicInterval::from_rational_endpoints(&lo, &hi, bits + 2);
        }
        k += 1;
    }
}

/// Enclosure of `sqrt` over a nonnegative interval.
pub fn sqrt_interval(iv: &DyadicInterval, bits: u32) -> Result<DyadicInterval> {
    let (lo, hi) = iv.to_rational_endpoints();
    if lo.is_negative() {
        return Err(Error::precondition("sqrt of a negative interval"));
    }
    let slo = kth_root_enclosure(&lo, 2, bits + 2);
    let shi = kth_root_enclosure(&hi, 2, bits + 2);
    Ok(DyadicInterval::new(slo.lo, shi.hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_matches_reference() {
        let e = e_enclosure(80);
        // e = 2.718281828459045235360287...
        let lo = rat(2718281828459045235u64 as i64, 1) / rat(10, 1).pow(18);
        let hi = rat(2718281828459045236u64 as i64, 1) / rat(10, 1).pow(18);
        assert!(e.lo.to_rational() <= hi && lo <= e.hi.to_rational());
        assert!(e.width().to_rational() <= rat(1, 2).pow(80));
    }

    #[test]
    fn ln_values() {
        // ln 2 = 0.693147180559945...
        let l2 = ln_enclosure(&rat(2, 1), 64).unwrap();
        let v = rat(693147180559945i64, 1) / rat(10, 1).pow(15);
        assert!(l2.lo.to_rational() <= v && v <= l2.hi.to_rational());
        // ln 10 = 2.302585092994046...
        let l10 = ln_enclosure(&rat(10, 1), 64).unwrap();
        let v10 = rat(2302585092994046i64, 1) / rat(10, 1).pow(15);
        assert!(l10.lo.to_rational() <= v10 && v10 <= l10.hi.to_rational());
        // ln(1/2) = -ln 2
        let lhalf = ln_enclosure(&rat(1, 2), 64).unwrap();
        assert!(lhalf.hi.to_rational() <= -v.clone() + rat(1, 1 << 30));
    }

    #[test]
    fn sqrt_interval_brackets() {
        let iv = DyadicInterval::from_rational_outward(&rat(2, 1), 30);
        let s = sqrt_interval(&iv, 40).unwrap();
        let v = rat(14142135623i64, 1) / rat(10, 1).pow(10);
        assert!(s.lo.to_rational() <= v && v <= s.hi.to_rational());
    }
}
