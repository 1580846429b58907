//! The lacunary product `T(z) = prod_{m>=0} (1 - z^(2^m))` and the derived
//! threshold `tau(p/q) = E(q/p)/p` with
//! `E(z) = (1 - (1-z) T(z)) / (2z)`, certified.
//!
//! Truncation: stop after the first index `m*` with `z^(2^m*) < 2^(-k-2)`;
//! the omitted tail satisfies `prod_{m>m*} (1 - z^(2^m)) >= 1 - 2 x` with
//! `x = z^(2^(m*+1))`, since the exponents at least double each step and
//! `sum x_i <= x/(1-x) <= 2x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::rat;
use crate::{Error, Result};

/// Enclosure of `T(z)` of width `<= 2^-k` for rational `0 < z < 1`.
pub fn product_t(z: &BigRational, k: u32) -> Result<DyadicInterval> {
    if !z.is_positive() || *z >= BigRational::one() {
        return Err(Error::precondition("product_T needs 0 < z < 1"));
    }
    let cutoff = rat(1, 2).pow((k + 2) as i32);
    let mut partial = BigRational::one();
    let mut zpow = z.clone(); // z^(2^m)
    loop {
        partial *= BigRational::one() - &zpow;
        let done = zpow < cutoff;
        zpow = &zpow * &zpow;
        if done {
            break;
        }
    }
    // tail factor in [1 - 2x, 1] with x = z^(2^(m*+1))
    let lo = &partial * (BigRational::one() - rat(2, 1) * &zpow);
    let iv = DyadicInterval::from_rational_endpoints(&lo, &partial, k + 4);
    debug_assert!(iv.width().to_rational() <= rat(1, 2).pow(k as i32));
    Ok(iv)
}

/// `tau(p/q)` with its certified enclosure and the three invariants of the
/// paper checked at construction: `1/(p+q) < tau < 1/2` and
/// `tau > 1/p - q^2/p^3`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TauValue {
    pub p: u64,
    pub q: u64,
    pub value: DyadicInterval,
}

/// Computes `tau(p/q) = (1 - (1-q/p) T(q/p)) / (2q)` for coprime `p > q >= 1`,
/// with enclosure width `<= 2^-k`, escalating the working precision until all
/// three invariants certify.
pub fn tau(p: u64, q: u64, k: u32) -> Result<TauValue> {
    if !(p > q && q >= 1) {
        return Err(Error::precondition("tau needs p > q >= 1"));
    }
    if num_integer::gcd(p, q) != 1 {
        return Err(Error::precondition("tau needs gcd(p, q) = 1"));
    }
    let z = rat(q as i64, p as i64);
    let one_minus_z = BigRational::one() - &z;
    let two_q = BigRational::from_integer(BigInt::from(2 * q));

    let lower_bound = rat(1, (p + q) as i64);
    let upper_half = rat(1, 2);
    let dubickas_floor = rat(1, p as i64) - rat((q * q) as i64, 1) / rat((p * p * p) as i64, 1);

    let mut bits = k.max(32);
    loop {
        let t = product_t(&z, bits)?;
        let (tlo, thi) = t.to_rational_endpoints();
        // decreasing in T: use T-hi for the lower end
        let vlo = (BigRational::one() - &one_minus_z * thi) / &two_q;
        let vhi = (BigRational::one() - &one_minus_z * tlo) / &two_q;
        let value = DyadicInterval::from_rational_endpoints(&vlo, &vhi, bits + 4);
        let certified = lower_bound < vlo && vhi < upper_half && dubickas_floor < vlo;
        if certified && value.width().to_rational() <= rat(1, 2).pow(k as i32) {
            return Ok(TauValue { p, q, value });
        }
        if bits > 1 << 16 {
            return Err(Error::UndecidableAtPrecision(format!(
                "tau({p}/{q}) invariants did not certify"
            )));
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::parse_rational;

    fn contains_decimal(iv: &DyadicInterval, s: &str, scale: u32) -> bool {
        // helper: value given as integer string over 10^scale
        let v = parse_rational(s).unwrap() / rat(10, 1).pow(scale as i32);
        iv.contains_rational(&v)
    }

    #[test]
    fn t_of_two_thirds() {
        // oracle (exact partial products): T(2/3) = 0.142589298977835405...
        let t = product_t(&rat(2, 3), 64).unwrap();
        assert!(contains_decimal(&t, "142589298977835405", 18));
        // the paper's displayed quantity 1/2 - (1-T(2/3))/4 = 0.285647...
        let (lo, hi) = t.to_rational_endpoints();
        let a = rat(1, 2) - (BigRational::one() - lo) / rat(4, 1);
        let b = rat(1, 2) - (BigRational::one() - hi) / rat(4, 1);
        let lo4 = rat(2856, 10000);
        let hi4 = rat(2857, 10000);
        assert!(lo4 <= a.clone().min(b.clone()) && a.max(b) <= hi4);
    }

    #[test]
    fn t_of_small_args() {
        // T(1/10) = 0.89091089109089091090891... (oracle)
        let t = product_t(&rat(1, 10), 64).unwrap();
        assert!(contains_decimal(&t, "890910891090890910", 18));
        // T(1/1024) in (0.9985, 1)
        let t = product_t(&rat(1, 1024), 64).unwrap();
        assert!(t.lo.to_rational() > rat(9985, 10000));
        assert!(t.hi.to_rational() < BigRational::one());
    }

    #[test]
    fn tau_ten() {
        // tau(10/1) = 0.09909009900909909009099... (oracle), and the paper's
        // bracket: 0.099090099... <= tau <= 1/10 - 1/1100 = 0.0990909...
        let tv = tau(10, 1, 64).unwrap();
        assert!(contains_decimal(&tv.value, "99090099009099090", 18));
        let upper = rat(1, 10) - rat(1, 1100);
        assert!(tv.value.hi.to_rational() <= upper.clone() + rat(1, 1 << 40));
        assert!(tv.value.lo.to_rational() < upper);
    }

    #[test]
    fn tau_three_halves() {
        // tau(3/2) = 0.238117558418513716... (oracle); 1/5 < tau < 1/2
        let tv = tau(3, 2, 64).unwrap();
        assert!(contains_decimal(&tv.value, "238117558418513716", 18));
        assert!(tv.value.lo.to_rational() > rat(1, 5));
        assert!(tv.value.hi.to_rational() < rat(1, 2));
    }

    #[test]
    fn tau_preconditions() {
        assert!(tau(4, 2, 32).is_err()); // not coprime
        assert!(tau(3, 3, 32).is_err()); // p > q violated
    }

    #[test]
    fn tau_dubickas_floor_explicit() {
        // tau(p/q) > 1/p - q^2/p^3 for the pairs named in the operation
        for (p, q) in [(3u64, 2u64), (5, 2), (7, 3), (10, 1)] {
            let tv = tau(p, q, 48).unwrap();
            let floor = rat(1, p as i64) - rat((q * q) as i64, 1) / rat((p * p * p) as i64, 1);
            assert!(tv.value.lo.to_rational() > floor, "tau({p}/{q})");
        }
    }
}
