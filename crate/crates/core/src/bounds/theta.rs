//! The Pollington-derived bound `theta(zeta) = 1/2 - zeta^(-4r) / (2(r+1))`
//! with `r` the least positive integer satisfying `zeta^r > r + 3`, plus the
//! bisection locating the crossing `theta(2+eta) = 1/(2(1+eta))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::{pow_i64, rat};
use crate::exact::{AlgebraicReal, FieldElem, NumberField, RealValue};
use crate::{Error, Result};

/// Least `r >= 1` with `zeta^r > r + 3`, decided exactly. Exists for every
/// `zeta > 1`.
pub fn pollington_r(zeta: &RealValue) -> Result<u64> {
    if zeta.cmp_rational(&BigRational::one()) != std::cmp::Ordering::Greater {
        return Err(Error::precondition("pollington_theta needs zeta > 1"));
    }
    match zeta {
        RealValue::Rational(z) => {
            let mut power = z.clone();
            let mut r = 1u64;
            loop {
                if power > BigRational::from_integer(BigInt::from(r + 3)) {
                    return Ok(r);
                }
                power *= z;
                r += 1;
            }
        }
        RealValue::Algebraic(a) => {
            let field = NumberField::new(a.clone());
            let mut power = field.elem_zeta();
            let mut r = 1u64;
            loop {
                let rhs = BigRational::from_integer(BigInt::from(r + 3));
                if field.cmp_rational(&power, &rhs) == std::cmp::Ordering::Greater {
                    return Ok(r);
                }
                power = field.mul(&power, &field.elem_zeta());
                r += 1;
            }
        }
    }
}

/// `(r, theta(zeta))` with a certified enclosure of width `<= 2^-bits`.
pub fn pollington_theta(zeta: &RealValue, bits: u32) -> Result<(u64, DyadicInterval)> {
    let r = pollington_r(zeta)?;
    let denom = BigRational::from_integer(BigInt::from(2 * (r + 1)));
    let half = rat(1, 2);
    match zeta {
        RealValue::Rational(z) => {
            // exact: 1/2 - z^(-4r) / (2(r+1))
            let v = &half - pow_i64(z, -(4 * r as i64)) / &denom;
            Ok((r, DyadicInterval::from_rational_outward(&v, bits + 2)))
        }
        RealValue::Algebraic(a) => {
            let mut work = bits + 16;
            loop {
                let iv = pow_interval(a, 4 * r as u32, work)?;
                if iv.lo.sign() != num_bigint::Sign::Plus {
                    work *= 2;
                    continue;
                }
                let (plo, phi) = iv.to_rational_endpoints();
                // theta increases with zeta^(4r)
                let lo = &half - plo.recip() / &denom;
                let hi = &half - phi.recip() / &denom;
                let out = DyadicInterval::from_rational_endpoints(&lo, &hi, bits + 4);
                if out.width().to_rational() <= rat(1, 2).pow(bits as i32) {
                    return Ok((r, out));
                }
                if work > 1 << 20 {
                    return Err(Error::UndecidableAtPrecision(
                        "theta enclosure did not converge".into(),
                    ));
                }
                work *= 2;
            }
        }
    }
}

fn pow_interval(a: &AlgebraicReal, n: u32, bits: u32) -> Result<DyadicInterval> {
    let extra = 16 + 4 * n.max(1).ilog2();
    Ok(a.refine(bits + extra)?.pow(n))
}

/// The crossing `eta` in `(lo, hi)` where `theta(2+eta) = 1/(2(1+eta))`,
/// located by exact-rational bisection to width `<= 2^-prec_bits`.
/// Fails if the bracket does not show a sign change.
pub fn theta_eta_crossing(
    lo: BigRational,
    hi: BigRational,
    prec_bits: u32,
) -> Result<(BigRational, BigRational)> {
    let f = |eta: &BigRational| -> Result<BigRational> {
        let z = RealValue::from_rational(rat(2, 1) + eta);
        let r = pollington_r(&z)?;
        // exact theta at a rational point
        let zeta = rat(2, 1) + eta;
        let theta = rat(1, 2)
            - pow_i64(&zeta, -(4 * r as i64))
                / BigRational::from_integer(BigInt::from(2 * (r + 1)));
        // compare against the conjectured-threshold reading 1/(2(zeta-1))
        let target = BigRational::one() / (rat(2, 1) * (&zeta - BigRational::one()));
        Ok(theta - target)
    };
    let mut a = lo;
    let mut b = hi;
    let fa = f(&a)?;
    let fb = f(&b)?;
    if fa.is_zero() || fb.is_zero() || fa.is_negative() == fb.is_negative() {
        return Err(Error::Degenerate(
            "eta bracket endpoints do not show a strict sign change".into(),
        ));
    }
    let target = rat(1, 2).pow(prec_bits as i32);
    while (&b - &a) > target {
        let mid = (&a + &b) / rat(2, 1);
        let fm = f(&mid)?;
        if fm.is_zero() {
            // exact crossing: a degenerate but decided bracket
            return Ok((mid.clone(), mid));
        }
        if fm.is_negative() == fa.is_negative() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a, b))
}

/// Exact theta evaluation at a rational point (used by grid scans).
pub fn theta_rational_exact(z: &BigRational) -> Result<(u64, BigRational)> {
    let r = pollington_r(&RealValue::from_rational(z.clone()))?;
    let theta = rat(1, 2)
        - pow_i64(z, -(4 * r as i64)) / BigRational::from_integer(BigInt::from(2 * (r + 1)));
    Ok((r, theta))
}

/// Field-element power helper exposed for tests in other modules.
pub fn zeta_pow_elem(field: &NumberField, n: u64) -> FieldElem {
    field.zeta_pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{isolate_real_roots, IntPolynomial};

    #[test]
    fn r_values() {
        // zeta = 2: 2 < 4, 4 < 5, 8 > 6 -> r = 3
        assert_eq!(pollington_r(&RealValue::from_rational(rat(2, 1))).unwrap(), 3);
        // zeta = 10: 10 > 4 -> r = 1
        assert_eq!(pollington_r(&RealValue::from_rational(rat(10, 1))).unwrap(), 1);
        // zeta = 3/2: 1.5<4, 2.25<5, 3.375<6, 5.06<7, 7.59<8, 11.4>9 -> r = 6
        assert_eq!(pollington_r(&RealValue::from_rational(rat(3, 2))).unwrap(), 6);
    }

    #[test]
    fn theta_at_two() {
        // theta(2) = 1/2 - 2^-12/8 = 1/2 - 1/32768
        let (r, theta) = theta_rational_exact(&rat(2, 1)).unwrap();
        assert_eq!(r, 3);
        assert_eq!(theta, rat(1, 2) - rat(1, 32768));
    }

    #[test]
    fn theta_grid_window() {
        // theta in (1/2 - 1/1024, 1/2) on a small grid
        for z in [rat(11, 10), rat(3, 2), rat(2, 1), rat(3, 1), rat(10, 1), rat(100, 1)] {
            let (_, theta) = theta_rational_exact(&z).unwrap();
            assert!(theta > rat(1, 2) - rat(1, 1024), "theta({z}) too small");
            assert!(theta < rat(1, 2), "theta({z}) too large");
        }
    }

    #[test]
    fn eta_crossing_bracket() {
        let (lo, hi) =
            theta_eta_crossing(rat(6, 100000), rat(7, 100000), 40).unwrap();
        // crossing near 1/16384 = 0.000061035...
        assert!(lo > rat(6, 100000) && hi < rat(7, 100000));
        assert!(lo <= rat(611, 10000000) && rat(610, 10000000) <= hi);
        assert!((&hi - &lo) <= rat(1, 2).pow(40));
    }

    #[test]
    fn theta_algebraic_near_cbrt6() {
        // root of x^3-6 has r = 3 (zeta^3 = 6 is NOT > 6, so wait: need strict)
        // zeta = cbrt6: zeta^3 = 6 = r+3 at r=3 fails strictness; r = 4: zeta^4 ~ 11.0 > 7
        let p = IntPolynomial::from_i64(&[-6, 0, 0, 1]);
        let locs = isolate_real_roots(&p);
        let z = RealValue::from_algebraic(
            AlgebraicReal::from_root_location(p, locs[0].clone()).unwrap(),
        );
        assert_eq!(pollington_r(&z).unwrap(), 4);
    }
}
