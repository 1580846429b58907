//! Real algebraic numbers: a primitive squarefree integer polynomial plus a
//! dyadic isolating interval containing exactly one real root. A point
//! interval (`lo == hi`) means the value is exactly that dyadic number;
//! otherwise the endpoints carry a strict sign change.
//!
//! Every comparison against a rational is decided exactly: interval refinement
//! when the values differ, a polynomial zero test when they might coincide.
//! Rounding (`floor`, `ceil`, nearest integer with the `{x}=1/2 -> floor` tie
//! rule) is built on one primitive, `floor_shift`, which never guesses.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::dyadic::{Dyadic, DyadicInterval};
use crate::exact::rational;
use crate::polyalg::{count_real_roots_in, IntPolynomial, RootLoc};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraicReal {
    minpoly: IntPolynomial,
    isolator: DyadicInterval,
}

impl AlgebraicReal {
    /// Wraps a root location produced by the isolation routines.
    pub fn from_root_location(poly: IntPolynomial, loc: RootLoc) -> Result<Self> {
        let minpoly = poly.squarefree_part();
        match loc {
            RootLoc::Exact(d) => Ok(AlgebraicReal {
                minpoly,
                isolator: DyadicInterval::point(d),
            }),
            RootLoc::SignChange(iv) => Self::new(minpoly, iv),
        }
    }

    /// Validated constructor: `poly` (made primitive/squarefree) must have
    /// exactly one real root in the interval, witnessed by a sign change.
    pub fn new(poly: IntPolynomial, isolator: DyadicInterval) -> Result<Self> {
        let minpoly = poly.squarefree_part();
        if minpoly.degree() == 0 {
            return Err(Error::Degenerate("constant polynomial has no roots".into()));
        }
        if isolator.lo == isolator.hi {
            if !minpoly.eval_dyadic(&isolator.lo).is_zero() {
                return Err(Error::Degenerate(
                    "point isolator is not a root of the polynomial".into(),
                ));
            }
            return Ok(AlgebraicReal { minpoly, isolator });
        }
        let slo = minpoly.eval_dyadic(&isolator.lo).sign();
        let shi = minpoly.eval_dyadic(&isolator.hi).sign();
        if slo == Sign::NoSign || shi == Sign::NoSign || slo == shi {
            return Err(Error::Degenerate(
                "isolator endpoints must show a strict sign change".into(),
            ));
        }
        let (lo, hi) = isolator.to_rational_endpoints();
        if count_real_roots_in(&minpoly, &lo, &hi) != 1 {
            return Err(Error::Degenerate(
                "isolator must contain exactly one real root".into(),
            ));
        }
        Ok(AlgebraicReal { minpoly, isolator })
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let minpoly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        let lo = Dyadic::from_rational_floor(&(r - rational::rat(1, 2)), 1);
        let hi = Dyadic::from_rational_ceil(&(r + rational::rat(1, 2)), 1);
        AlgebraicReal {
            minpoly,
            isolator: DyadicInterval::new(lo, hi),
        }
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn isolator(&self) -> &DyadicInterval {
        &self.isolator
    }

    pub fn is_exact_dyadic(&self) -> bool {
        self.isolator.lo == self.isolator.hi
    }

    /// Bisection refinement: an isolator of width `<= 2^-k` around the same root.
    pub fn refine(&self, k: u32) -> Result<DyadicInterval> {
        let target = Dyadic::new(BigInt::one(), k);
        let mut iv = self.isolator.clone();
        if iv.lo == iv.hi {
            return Ok(iv);
        }
        // the sign at lo is invariant under the bisection below
        let slo = self.minpoly.eval_dyadic(&iv.lo).sign();
        while iv.width() > target {
            let mid = iv.midpoint();
            let sm = self.minpoly.eval_dyadic(&mid).sign();
            if sm == Sign::NoSign {
                // the root is exactly this dyadic point
                return Ok(DyadicInterval::point(mid));
            }
            if sm == slo {
                iv = DyadicInterval::new(mid, iv.hi);
            } else {
                iv = DyadicInterval::new(iv.lo, mid);
            }
        }
        Ok(iv)
    }

    /// Refined copy (same value, tighter stored isolator).
    pub fn refined(&self, k: u32) -> Result<Self> {
        Ok(AlgebraicReal {
            minpoly: self.minpoly.clone(),
            isolator: self.refine(k)?,
        })
    }

    pub fn neg(&self) -> Self {
        AlgebraicReal {
            minpoly: self.minpoly.negate_var().primitive(),
            isolator: self.isolator.neg(),
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if self.is_exact_dyadic() {
            return self.isolator.lo.to_rational().cmp(r);
        }
        // equality is decidable up front: the isolator holds exactly one root
        let num = self.minpoly.eval_rational(r);
        if num.is_zero() && self.isolator.contains_rational(r) {
            return Ordering::Equal;
        }
        let mut iv = self.isolator.clone();
        let mut k = widen_bits(&iv);
        loop {
            if *r <= iv.lo.to_rational() {
                return Ordering::Greater; // root strictly above lo
            }
            if *r >= iv.hi.to_rational() {
                return Ordering::Less;
            }
            k += 8;
            iv = self
                .refine_from(iv, k)
                .expect("refinement cannot fail on a valid isolator");
            if iv.lo == iv.hi {
                return iv.lo.to_rational().cmp(r);
            }
        }
    }

    fn refine_from(&self, start: DyadicInterval, k: u32) -> Result<DyadicInterval> {
        let tmp = AlgebraicReal {
            minpoly: self.minpoly.clone(),
            isolator: start,
        };
        tmp.refine(k)
    }

    pub fn sign(&self) -> Ordering {
        self.cmp_rational(&BigRational::zero())
    }

    /// Exact value when the minimal polynomial is linear.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.minpoly.degree() == 1 {
            let a = self.minpoly.coeff(1);
            let b = self.minpoly.coeff(0);
            return Some(BigRational::new(-b, a));
        }
        if self.is_exact_dyadic() {
            return Some(self.isolator.lo.to_rational());
        }
        None
    }

    /// `floor(x + t)` decided exactly.
    pub fn floor_shift(&self, t: &BigRational) -> BigInt {
        if let Some(r) = self.as_rational() {
            return rational::floor(&(r + t));
        }
        let mut k = widen_bits(&self.isolator);
        let mut iv = self.isolator.clone();
        loop {
            let lo = iv.lo.to_rational() + t;
            let hi = iv.hi.to_rational() + t;
            let flo = rational::floor(&lo);
            let fhi = rational::floor(&hi);
            if flo == fhi {
                return flo;
            }
            if &fhi - &flo == BigInt::one() {
                // single integer candidate m = fhi in (lo, hi]
                let m = BigRational::from_integer(fhi.clone());
                match self.cmp_rational(&(&m - t)) {
                    Ordering::Equal | Ordering::Greater => return fhi,
                    Ordering::Less => return flo,
                }
            }
            k += 8;
            iv = self.refine_from(iv, k).expect("refinement cannot fail");
            if iv.lo == iv.hi {
                return rational::floor(&(iv.lo.to_rational() + t));
            }
        }
    }

    pub fn floor(&self) -> BigInt {
        self.floor_shift(&BigRational::zero())
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Nearest integer with the tie rule (ties resolve to the floor):
    /// `<x> = ceil(x - 1/2) = -floor(1/2 - x)`.
    pub fn nearest(&self) -> BigInt {
        -self.neg().floor_shift(&rational::rat(1, 2))
    }

    /// Enclosure of `|x - nearest(x)|` of width `<= 2^-bits`.
    pub fn dist_to_nearest(&self, bits: u32) -> Result<DyadicInterval> {
        let n = self.nearest();
        let iv = self.refine(bits + 2)?;
        let shifted = iv.sub(&DyadicInterval::from_int(n));
        Ok(shifted.abs())
    }
}

fn widen_bits(iv: &DyadicInterval) -> u32 {
    iv.lo.exp().max(iv.hi.exp()).max(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};
    use num_traits::Signed;
    use crate::polyalg::isolate_real_roots;

    fn root_of(coeffs: &[i64], pick: usize) -> AlgebraicReal {
        let p = IntPolynomial::from_i64(coeffs);
        let locs = isolate_real_roots(&p);
        AlgebraicReal::from_root_location(p, locs[pick].clone()).unwrap()
    }

    #[test]
    fn refine_sqrt5_plus_2() {
        // largest root of x^2-4x-1 is 2+sqrt5 = 4.2360679...
        let x = root_of(&[-1, -4, 1], 1);
        let iv = x.refine(20).unwrap();
        assert!(iv.width().to_rational() <= rat(1, 1 << 20));
        assert!(iv.contains_rational(&rat(4236068, 1000000)) || {
            let (lo, hi) = iv.to_rational_endpoints();
            lo < rat(4236068, 1000000) && rat(4236067, 1000000) < hi
        });
        // idempotent in the enclosed value: refining again nests
        let iv30 = x.refine(30).unwrap();
        assert!(iv.contains(&iv30));
    }

    #[test]
    fn refine_rational_root() {
        let x = AlgebraicReal::from_rational(&rat(7, 3));
        let iv = x.refine(25).unwrap();
        assert!(iv.contains_rational(&rat(7, 3)));
        assert!(iv.width().to_rational() <= rat(1, 1 << 25));
    }

    #[test]
    fn refine_cbrt6() {
        // root of x^3-6 in (1,2): 1.81712...
        let x = root_of(&[-6, 0, 0, 1], 0);
        let iv = x.refine(30).unwrap();
        let v = rat(181712059, 100000000);
        let (lo, hi) = iv.to_rational_endpoints();
        assert!(lo <= v && v <= hi || (hi.clone() - &v).abs() < rat(1, 100000000));
        assert!(iv.width().to_rational() <= rat(1, 1 << 30));
    }

    #[test]
    fn nearest_and_dist() {
        let x = root_of(&[-1, -4, 1], 1); // 2+sqrt5 ~ 4.236
        assert_eq!(x.nearest(), BigInt::from(4));
        assert_eq!(x.floor(), BigInt::from(4));
        assert_eq!(x.ceil(), BigInt::from(5));
        let d = x.dist_to_nearest(40).unwrap();
        // ||2+sqrt5|| = sqrt5 - 2 = 0.2360679...
        assert!(d.contains_rational(&rat(2360680, 10000000)) || {
            let (lo, hi) = d.to_rational_endpoints();
            lo < rat(2360680, 10000000) && rat(2360679, 10000000) < hi
        });
    }

    #[test]
    fn nearest_tie_on_exact_half() {
        // value 5/2 as an algebraic real: tie resolves to floor = 2
        let x = AlgebraicReal::from_rational(&rat(5, 2));
        assert_eq!(x.nearest(), BigInt::from(2));
        let y = AlgebraicReal::from_rational(&rat(-5, 2));
        assert_eq!(y.nearest(), BigInt::from(-3));
    }

    #[test]
    fn cmp_rational_exact() {
        let x = root_of(&[-2, 0, 1], 1); // sqrt2
        assert_eq!(x.cmp_rational(&rat(3, 2)), Ordering::Less);
        assert_eq!(x.cmp_rational(&rat(7, 5)), Ordering::Greater);
        assert_eq!(x.cmp_rational(&rat_int(2)), Ordering::Less);
        let r = AlgebraicReal::from_rational(&rat(22, 7));
        assert_eq!(r.cmp_rational(&rat(22, 7)), Ordering::Equal);
    }
}
