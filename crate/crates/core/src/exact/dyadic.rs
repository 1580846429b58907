//! Dyadic rationals `m * 2^-k` and closed intervals with dyadic endpoints.
//!
//! Dyadics are closed under addition, subtraction and multiplication, so the
//! interval arithmetic below is *exact* for those operations; only division
//! and root extraction round, and they round outward at a caller-chosen
//! precision. This is what makes the enclosures certificates rather than
//! estimates.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde::Serialize;

/// `mant * 2^-exp` with `exp >= 0`, normalized so `exp` is minimal.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic { mant: n.into(), exp: 0 }
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.mant.is_even() {
            self.mant /= 2;
            self.exp -= 1;
        }
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.exp)
    }

    /// Exact test `self == r`.
    pub fn eq_rational(&self, r: &BigRational) -> bool {
        self.to_rational() == *r
    }

    /// Largest dyadic on the `2^-bits` grid that is `<= r`.
    pub fn from_rational_floor(r: &BigRational, bits: u32) -> Self {
        let scaled = r * BigRational::from_integer(BigInt::one() << bits);
        Dyadic::new(scaled.floor().to_integer(), bits)
    }

    /// Smallest dyadic on the `2^-bits` grid that is `>= r`.
    pub fn from_rational_ceil(r: &BigRational, bits: u32) -> Self {
        let scaled = r * BigRational::from_integer(BigInt::one() << bits);
        Dyadic::new(scaled.ceil().to_integer(), bits)
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -self.mant.clone(), exp: self.exp }
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = self.exp.max(other.exp);
        let a = &self.mant << (e - self.exp);
        let b = &other.mant << (e - other.exp);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Dyadic::new(&self.mant * k, self.exp)
    }

    /// Exact halving.
    pub fn half(&self) -> Self {
        Dyadic::new(self.mant.clone(), self.exp + 1)
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// Directed-rounding division: (floor, ceil) of `self / other` on the
    /// `2^-bits` grid. `other` must be nonzero.
    pub fn div_floor_ceil(&self, other: &Self, bits: u32) -> (Self, Self) {
        let q = self.to_rational() / other.to_rational();
        (
            Dyadic::from_rational_floor(&q, bits),
            Dyadic::from_rational_ceil(&q, bits),
        )
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.mant << (e - self.exp);
        let b = &other.mant << (e - other.exp);
        a.cmp(&b)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.mant, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.mant, BigInt::one() << self.exp)
    }
}

impl Serialize for Dyadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // exact "num/den" with den a power of two
        s.serialize_str(&format!("{}/{}", self.mant, BigInt::one() << self.exp))
    }
}

/// Certified enclosure `[lo, hi]`, `lo <= hi`. Width is exactly representable.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct DyadicInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        DyadicInterval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::point(Dyadic::from_int(n))
    }

    /// Outward-rounded enclosure of an exact rational at `2^-bits` resolution.
    pub fn from_rational_outward(r: &BigRational, bits: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational_floor(r, bits),
            hi: Dyadic::from_rational_ceil(r, bits),
        }
    }

    /// Outward enclosure of an exact rational interval.
    pub fn from_rational_endpoints(lo: &BigRational, hi: &BigRational, bits: u32) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval {
            lo: Dyadic::from_rational_floor(lo, bits),
            hi: Dyadic::from_rational_ceil(hi, bits),
        }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).half()
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        self.lo.to_rational() <= *r && *r <= self.hi.to_rational()
    }

    pub fn contains(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != Sign::Plus && self.hi.sign() != Sign::Minus
    }

    /// Disjointness as closed intervals.
    pub fn disjoint(&self, other: &DyadicInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn neg(&self) -> Self {
        DyadicInterval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn add(&self, other: &Self) -> Self {
        DyadicInterval { lo: self.lo.add(&other.lo), hi: self.hi.add(&other.hi) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_rational_outward(&self, r: &BigRational, bits: u32) -> Self {
        let lo = self.lo.to_rational() + r;
        let hi = self.hi.to_rational() + r;
        Self::from_rational_endpoints(&lo, &hi, bits)
    }

    /// Exact interval product.
    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        DyadicInterval { lo, hi }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let a = self.lo.mul_int(k);
        let b = self.hi.mul_int(k);
        if a <= b {
            DyadicInterval { lo: a, hi: b }
        } else {
            DyadicInterval { lo: b, hi: a }
        }
    }

    /// Exact `self^n`, n >= 0.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = DyadicInterval::from_int(1);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Outward-rounded reciprocal; requires the interval to exclude zero.
    pub fn recip_outward(&self, bits: u32) -> crate::Result<Self> {
        if self.contains_zero() {
            return Err(crate::Error::Degenerate(
                "reciprocal of an interval containing zero".into(),
            ));
        }
        let lo = self.hi.to_rational().recip();
        let hi = self.lo.to_rational().recip();
        Ok(Self::from_rational_endpoints(&lo, &hi, bits))
    }

    /// Outward-rounded division.
    pub fn div_outward(&self, other: &Self, bits: u32) -> crate::Result<Self> {
        Ok(self.mul(&other.recip_outward(bits + 4)?))
    }

    /// Absolute-value interval: encloses `|x|` for `x` in `self`.
    pub fn abs(&self) -> Self {
        if self.contains_zero() {
            DyadicInterval { lo: Dyadic::zero(), hi: self.lo.abs().max(self.hi.abs()) }
        } else if self.hi.sign() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Certified `self < other` (true only when the closed intervals prove it).
    pub fn certainly_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn to_rational_endpoints(&self) -> (BigRational, BigRational) {
        (self.lo.to_rational(), self.hi.to_rational())
    }

    /// Decimal rendering of both endpoints, rounded outward, for reports.
    pub fn display_decimal(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            decimal_floor(&self.lo.to_rational(), digits),
            decimal_ceil(&self.hi.to_rational(), digits)
        )
    }
}

impl fmt::Debug for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

/// Decimal string of `floor(x * 10^digits) / 10^digits`.
pub fn decimal_floor(x: &BigRational, digits: usize) -> String {
    decimal_directed(x, digits, true)
}

/// Decimal string of `ceil(x * 10^digits) / 10^digits`.
pub fn decimal_ceil(x: &BigRational, digits: usize) -> String {
    decimal_directed(x, digits, false)
}

fn decimal_directed(x: &BigRational, digits: usize, down: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let n = if down {
        scaled.floor().to_integer()
    } else {
        scaled.ceil().to_integer()
    };
    let neg = n.is_negative();
    let a = n.abs();
    let (q, r) = a.div_rem(&scale);
    let frac = format!("{:0>width$}", r.to_string(), width = digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{q}")
    } else {
        format!("{sign}{q}.{frac}")
    }
}
