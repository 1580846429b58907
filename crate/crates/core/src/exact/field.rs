//! Arithmetic in Q(zeta) for a fixed algebraic real `zeta`: elements are
//! polynomials in `zeta` with rational coefficients, reduced modulo the
//! minimal polynomial. Certified rounding of elements works exactly like the
//! scalar case: refine `zeta`'s isolator until the enclosure decides, with a
//! symbolic zero test (gcd against the minimal polynomial) for exact ties.
//!
//! Only a ring plus division by rationals and by powers of `zeta` is needed
//! here; no general element inversion.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::algebraic::AlgebraicReal;
use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational;
use crate::polyalg::{count_real_roots_in, IntPolynomial};
use crate::{Error, Result};

/// The ambient field: a distinguished algebraic real `zeta`.
#[derive(Clone, Debug)]
pub struct NumberField {
    zeta: AlgebraicReal,
}

/// An element `c_0 + c_1 zeta + ... + c_{d-1} zeta^{d-1}`, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldElem {
    #[serde(serialize_with = "crate::exact::wire::ser_rational_vec")]
    coeffs: Vec<BigRational>,
}

impl FieldElem {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FieldElem { coeffs }
    }

    pub fn zero() -> Self {
        FieldElem { coeffs: vec![] }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact rational value when the representation is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl NumberField {
    pub fn new(zeta: AlgebraicReal) -> Self {
        NumberField { zeta }
    }

    pub fn zeta(&self) -> &AlgebraicReal {
        &self.zeta
    }

    pub fn degree(&self) -> usize {
        self.zeta.minpoly().degree()
    }

    pub fn elem_zeta(&self) -> FieldElem {
        if self.degree() == 1 {
            let r = self.zeta.as_rational().expect("degree-1 value is rational");
            return FieldElem::from_rational(r);
        }
        FieldElem::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn elem_from_coords(&self, coords: Vec<BigRational>) -> Result<FieldElem> {
        if coords.len() > self.degree().max(1) {
            return Err(Error::precondition(format!(
                "coordinate vector longer than the field degree {}",
                self.degree()
            )));
        }
        Ok(FieldElem::new(coords))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            v[i] += c;
        }
        FieldElem::new(v)
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem::new(a.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scalar_mul(&self, c: &BigRational, a: &FieldElem) -> FieldElem {
        FieldElem::new(a.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add_rational(&self, a: &FieldElem, c: &BigRational) -> FieldElem {
        let mut v = a.coeffs.clone();
        if v.is_empty() {
            v.push(c.clone());
        } else {
            v[0] += c;
        }
        FieldElem::new(v)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::zero();
        }
        let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    /// Reduce a coefficient vector modulo the minimal polynomial.
    fn reduce(&self, mut v: Vec<BigRational>) -> FieldElem {
        let d = self.degree();
        if d == 0 {
            return FieldElem::new(v);
        }
        let mp = self.zeta.minpoly();
        let lead = BigRational::from_integer(mp.leading());
        while v.len() > d {
            let k = v.len() - 1 - d;
            let q = v.last().unwrap() / &lead;
            for i in 0..=d {
                let t = &q * BigRational::from_integer(mp.coeff(i));
                v[k + i] -= t;
            }
            while v.last().map_or(false, |c| c.is_zero()) {
                v.pop();
            }
            if v.len() <= d {
                break;
            }
        }
        FieldElem::new(v)
    }

    /// `zeta^n` for n >= 0.
    pub fn zeta_pow(&self, n: u64) -> FieldElem {
        let mut acc = FieldElem::from_rational(BigRational::one());
        let mut base = self.elem_zeta();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: &FieldElem, n: u64) -> FieldElem {
        let mut acc = FieldElem::from_rational(BigRational::one());
        let mut base = a.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `zeta^{-1}`; requires a nonzero constant term of the minimal polynomial.
    pub fn zeta_inv(&self) -> Result<FieldElem> {
        let mp = self.zeta.minpoly();
        let a0 = mp.coeff(0);
        if a0.is_zero() {
            return Err(Error::Degenerate("zeta has minimal polynomial with root 0".into()));
        }
        if self.degree() == 1 {
            let r = self.zeta.as_rational().unwrap();
            if r.is_zero() {
                return Err(Error::Degenerate("division by zero".into()));
            }
            return Ok(FieldElem::from_rational(r.recip()));
        }
        // from a_0 = -zeta (a_1 + a_2 zeta + ... + a_d zeta^{d-1})
        let d = self.degree();
        let mut v = Vec::with_capacity(d);
        for i in 1..=d {
            v.push(BigRational::new(-mp.coeff(i), a0.clone()));
        }
        Ok(FieldElem::new(v))
    }

    /// Exact equality with a rational.
    pub fn eq_rational(&self, a: &FieldElem, c: &BigRational) -> bool {
        let diff = self.add_rational(a, &(-c.clone()));
        self.is_zero_elem(&diff)
    }

    /// Exact zero test of an element value (not just its representation).
    pub fn is_zero_elem(&self, a: &FieldElem) -> bool {
        if a.is_zero() {
            return true;
        }
        if a.coeffs.len() == 1 {
            return a.coeffs[0].is_zero();
        }
        // clear denominators, gcd with the minimal polynomial, then ask whether
        // the common factor vanishes at the represented root
        let mut den = BigInt::one();
        for c in &a.coeffs {
            den = den.lcm(c.denom());
        }
        let int_coeffs: Vec<BigInt> = a
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let u = IntPolynomial::new(int_coeffs);
        let g = u.gcd(self.zeta.minpoly());
        if g.degree() == 0 {
            return false;
        }
        let iv = self.zeta.isolator();
        if iv.lo == iv.hi {
            return g.eval_dyadic(&iv.lo).is_zero();
        }
        let (lo, hi) = iv.to_rational_endpoints();
        count_real_roots_in(&g, &lo, &hi) == 1
    }

    /// Certified enclosure of the real value of `a`, width `<= 2^-bits`.
    pub fn enclosure(&self, a: &FieldElem, bits: u32) -> Result<DyadicInterval> {
        if let Some(c) = a.as_constant() {
            return Ok(DyadicInterval::from_rational_outward(&c, bits + 2));
        }
        // integerize: a = E(zeta)/den
        let mut den = BigInt::one();
        for c in &a.coeffs {
            den = den.lcm(c.denom());
        }
        let e = IntPolynomial::new(
            a.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
        let den_iv = DyadicInterval::from_int(den.clone());
        let mut k = 16u32;
        loop {
            let ziv = self.zeta.refine(k)?;
            let out = e.eval_interval(&ziv).div_outward(&den_iv, bits + 4)?;
            if out.width().to_rational() <= rational::rat(1, 2).pow(bits as i32) {
                return Ok(out);
            }
            k = k.saturating_mul(2);
            if k > 1 << 24 {
                return Err(Error::UndecidableAtPrecision(
                    "field element enclosure did not converge".into(),
                ));
            }
        }
    }

    /// Exact sign of the element value.
    pub fn sign(&self, a: &FieldElem) -> Ordering {
        if self.is_zero_elem(a) {
            return Ordering::Equal;
        }
        let mut bits = 16u32;
        loop {
            let iv = self.enclosure(a, bits).expect("enclosure converges on nonzero element");
            if !iv.contains_zero() {
                return if iv.lo.sign() == num_bigint::Sign::Plus {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            bits = bits.saturating_mul(2);
        }
    }

    pub fn cmp_rational(&self, a: &FieldElem, c: &BigRational) -> Ordering {
        let diff = self.add_rational(a, &(-c.clone()));
        self.sign(&diff)
    }

    pub fn cmp(&self, a: &FieldElem, b: &FieldElem) -> Ordering {
        self.sign(&self.sub(a, b))
    }

    /// `floor(a + t)` decided exactly.
    pub fn floor_shift(&self, a: &FieldElem, t: &BigRational) -> BigInt {
        if let Some(c) = a.as_constant() {
            return rational::floor(&(c + t));
        }
        let mut bits = 16u32;
        loop {
            let iv = self.enclosure(a, bits).expect("enclosure converges");
            let lo = iv.lo.to_rational() + t;
            let hi = iv.hi.to_rational() + t;
            let flo = rational::floor(&lo);
            let fhi = rational::floor(&hi);
            if flo == fhi {
                return flo;
            }
            if &fhi - &flo == BigInt::one() {
                let m = BigRational::from_integer(fhi.clone()) - t;
                match self.cmp_rational(a, &m) {
                    Ordering::Equal | Ordering::Greater => return fhi,
                    Ordering::Less => return flo,
                }
            }
            bits = bits.saturating_mul(2);
        }
    }

    pub fn floor(&self, a: &FieldElem) -> BigInt {
        self.floor_shift(a, &BigRational::zero())
    }

    pub fn ceil(&self, a: &FieldElem) -> BigInt {
        -self.floor_shift(&self.neg(a), &BigRational::zero())
    }

    /// Nearest integer with the `{x} = 1/2 -> floor` tie rule.
    pub fn nearest(&self, a: &FieldElem) -> BigInt {
        -self.floor_shift(&self.neg(a), &rational::rat(1, 2))
    }

    /// Fractional part `{a}` as an exact field element.
    pub fn frac(&self, a: &FieldElem) -> FieldElem {
        let f = self.floor(a);
        self.add_rational(a, &BigRational::from_integer(-f))
    }

    /// Enclosure of `|a - nearest(a)|`, width `<= 2^-bits`, plus the integer.
    pub fn dist_to_nearest(&self, a: &FieldElem, bits: u32) -> Result<(BigInt, DyadicInterval)> {
        let n = self.nearest(a);
        let shifted = self.add_rational(a, &BigRational::from_integer(-n.clone()));
        if self.is_zero_elem(&shifted) {
            return Ok((n, DyadicInterval::from_int(0)));
        }
        let iv = self.enclosure(&shifted, bits + 2)?;
        Ok((n, iv.abs()))
    }
}

/// `alpha * zeta^n` rounded: the nearest integer and a certified enclosure of
/// the distance to it. `alpha` is given by its coordinates over the power
/// basis of `zeta`.
pub fn field_pow_frac(
    alpha: &FieldElem,
    field: &NumberField,
    n: u64,
    bits: u32,
) -> Result<(BigInt, DyadicInterval)> {
    let zn = field.zeta_pow(n);
    let x = field.mul(alpha, &zn);
    field.dist_to_nearest(&x, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};
    use crate::polyalg::isolate_real_roots;

    fn zeta24() -> NumberField {
        // 2 + sqrt5, largest root of x^2-4x-1
        let p = IntPolynomial::from_i64(&[-1, -4, 1]);
        let locs = isolate_real_roots(&p);
        NumberField::new(AlgebraicReal::from_root_location(p, locs[1].clone()).unwrap())
    }

    #[test]
    fn pow_and_round_in_qsqrt5() {
        let f = zeta24();
        let one = FieldElem::from_rational(BigRational::one());
        // zeta^2 = 9 + 4 sqrt5 = 17.944..., nearest 18, dist ~ 0.0557
        let (n, d) = field_pow_frac(&one, &f, 2, 64).unwrap();
        assert_eq!(n, BigInt::from(18));
        let (lo, hi) = d.to_rational_endpoints();
        assert!(lo < rat(558, 10000) && rat(557, 10000) < hi);
        // zeta^0 = 1: nearest 1, dist exactly 0
        let (n0, d0) = field_pow_frac(&one, &f, 0, 64).unwrap();
        assert_eq!(n0, BigInt::from(1));
        assert!(d0.contains_rational(&BigRational::zero()));
        assert!(d0.width().to_rational() == rat_int(0));
    }

    #[test]
    fn pisot_decay_is_strict() {
        // ||zeta^8|| < ||zeta^4|| < ||zeta^2|| for the Pisot number 2+sqrt5
        let f = zeta24();
        let one = FieldElem::from_rational(BigRational::one());
        let d2 = field_pow_frac(&one, &f, 2, 80).unwrap().1;
        let d4 = field_pow_frac(&one, &f, 4, 80).unwrap().1;
        let d8 = field_pow_frac(&one, &f, 8, 80).unwrap().1;
        assert!(d8.certainly_lt(&d4));
        assert!(d4.certainly_lt(&d2));
    }

    #[test]
    fn power_split_associativity() {
        // alpha*zeta^(m+n) equals (alpha*zeta^m) * zeta^n exactly
        let f = zeta24();
        let alpha = f
            .elem_from_coords(vec![rat(3, 7), rat(-2, 5)])
            .unwrap();
        let lhs = f.mul(&alpha, &f.zeta_pow(9));
        let step = f.mul(&alpha, &f.zeta_pow(4));
        let rhs = f.mul(&step, &f.zeta_pow(5));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_ties_detected_symbolically() {
        // element exactly 7/2: nearest must be 3 (tie -> floor)
        let f = zeta24();
        let e = FieldElem::from_rational(rat(7, 2));
        assert_eq!(f.nearest(&e), BigInt::from(3));
        // element zeta - zeta + 5/2 with non-constant intermediate
        let z = f.elem_zeta();
        let e2 = f.add_rational(&f.sub(&z, &z), &rat(5, 2));
        assert_eq!(f.nearest(&e2), BigInt::from(2));
    }

    #[test]
    fn zero_test_via_gcd() {
        let f = zeta24();
        // zeta^2 - 4 zeta - 1 = 0 exactly
        let z = f.elem_zeta();
        let e = f.add_rational(
            &f.sub(&f.mul(&z, &z), &f.scalar_mul(&rat_int(4), &z)),
            &rat_int(-1),
        );
        assert!(f.is_zero_elem(&e));
        assert_eq!(f.sign(&e), Ordering::Equal);
    }

    #[test]
    fn zeta_inverse() {
        let f = zeta24();
        let inv = f.zeta_inv().unwrap();
        let prod = f.mul(&inv, &f.elem_zeta());
        assert!(f.eq_rational(&prod, &BigRational::one()));
    }

    #[test]
    fn rational_field_degenerates_gracefully() {
        let f = NumberField::new(AlgebraicReal::from_rational(&rat(10, 1)));
        let z = f.elem_zeta();
        assert_eq!(z.as_constant(), Some(rat_int(10)));
        let p = f.zeta_pow(3);
        assert_eq!(p.as_constant(), Some(rat_int(1000)));
    }
}
