//! Integer polynomials and their classical invariants: length `L`, height `H`,
//! the 2-norm, root bounds, Mahler-measure brackets, exact root counting with
//! respect to the unit circle, Pisot/Salem classification, and the two
//! polynomial families `X^m - b X^{m-1} - 1` and `2 X^m - b X^{m-1} - 1`.

mod factor;
mod pisot;
mod roots;

pub use factor::{factor_primitive, is_irreducible};
pub use pisot::{classify_pisot_salem, hot_criterion, largest_real_root, minimal_polynomial, Classification, PisotReport};
pub use roots::{count_real_roots_in, count_roots_unit_disk, isolate_real_roots, RootLoc};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::dyadic::{Dyadic, DyadicInterval};
use crate::exact::rational::parse_rational;
use crate::exact::AlgebraicReal;
use crate::{Error, Result};

/// Dense integer polynomial, coefficients ascending (`coeffs[i]` multiplies `X^i`),
/// leading coefficient nonzero. The empty vector is the zero polynomial.
/// Serializes as an ascending list of decimal coefficient strings.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntPolynomial {
    #[serde(serialize_with = "crate::exact::wire::ser_bigint_vec")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn x() -> Self {
        IntPolynomial { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPolynomial { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 alongside `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// `L(P)`: sum of absolute coefficients.
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// `H(P)`: max absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Squared 2-norm: sum of squared coefficients.
    pub fn l2norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Dyadic::from_int(c.clone()));
        }
        acc
    }

    /// Exact interval evaluation (Horner over exact dyadic intervals).
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let mut acc = DyadicInterval::from_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&DyadicInterval::from_int(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division; panics if not divisible (internal use only).
    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.pseudo_div_exact(other);
        assert!(r.is_zero(), "div_exact: remainder nonzero");
        q
    }

    /// Division over Q returning (quotient, remainder) scaled back to integers
    /// when exact; used where divisibility is known or checked.
    fn pseudo_div_exact(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d = other.degree();
        let lead = BigRational::from_integer(other.leading());
        let mut quo = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1 - d;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (i, oc) in other.coeffs.iter().enumerate() {
                    let t = &q * BigRational::from_integer(oc.clone());
                    rem[k + i] -= t;
                }
            }
            quo[k] = q;
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= d {
                break;
            }
        }
        let to_int = |v: Vec<BigRational>| -> Self {
            let all_int = v.iter().all(|c| c.denom().is_one());
            assert!(all_int, "pseudo_div_exact produced non-integer coefficients");
            Self::new(v.into_iter().map(|c| c.numer().clone()).collect())
        };
        (to_int(quo), to_int(rem))
    }

    /// True when `other` divides `self` over the integers (content included).
    pub fn divides(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        // rational long division, then integrality check
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d = other.degree();
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d {
            return None;
        }
        let lead = BigRational::from_integer(other.leading());
        let mut quo = vec![BigRational::zero(); self.coeffs.len() - d];
        loop {
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= d {
                break;
            }
            let k = rem.len() - 1 - d;
            let q = rem.last().unwrap() / &lead;
            for (i, oc) in other.coeffs.iter().enumerate() {
                let t = &q * BigRational::from_integer(oc.clone());
                rem[k + i] -= t;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        if quo.iter().any(|c| !c.denom().is_one()) {
            return None;
        }
        Some(Self::new(quo.into_iter().map(|c| c.numer().clone()).collect()))
    }

    /// Content: gcd of coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Reciprocal polynomial `X^deg * P(1/X)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// `P(-X)`.
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Number of trailing zero coefficients (multiplicity of the root 0).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out `X^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Polynomial gcd over Z (primitive, positive leading coefficient),
    /// via the primitive-PRS Euclidean chain.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.primitive();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
    }

    /// Pseudo-remainder: a scalar multiple of `a mod b`, exact over Z.
    pub fn pseudo_rem(&self, other: &Self) -> Self {
        assert!(!other.is_zero());
        let d = other.degree();
        if d == 0 {
            return Self::zero();
        }
        let lb = other.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let lr = r.leading();
            r = r.mul_int(&lb).sub(&other.mul(&Self::monomial(lr, k)));
        }
        r
    }

    /// Squarefree part `P / gcd(P, P')`, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.primitive()
        } else {
            self.primitive().div_exact(&g).primitive()
        }
    }

    /// Cauchy bound `1 + H(lower coeffs)/|lead|` on all root moduli, exact rational.
    /// Convention: a pure monomial reports 1.
    pub fn cauchy_root_bound(&self) -> BigRational {
        assert!(self.degree() >= 1, "cauchy bound needs a nonconstant polynomial");
        let h = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        if h.is_zero() {
            return BigRational::one();
        }
        BigRational::one() + BigRational::new(h, self.leading().abs())
    }

    /// Certified enclosure of the 2-norm `sqrt(sum a_i^2)`, which bounds the
    /// Mahler measure `M(P)` from above.
    pub fn l2norm_enclosure(&self, bits: u32) -> DyadicInterval {
        sqrt_int_enclosure(&self.l2norm_sq(), bits)
    }

    /// Parse either an ascending coefficient list "[a0,a1,...]" or a string like
    /// "x^2-4x-1" / "2x^3 - 5x - 1".
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|u| u.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad coefficient list {s:?}")))?;
            let mut v = Vec::new();
            for part in inner.split(',') {
                let r = parse_rational(part)?;
                if !r.denom().is_one() {
                    return Err(Error::Parse("coefficient list must be integers".into()));
                }
                v.push(r.numer().clone());
            }
            return Ok(Self::new(v));
        }
        parse_poly_expr(t)
    }
}

fn fmt_poly(p: &IntPolynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        match i {
            0 => write!(f, "{abs}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

/// Certified enclosure of `sqrt(n)` for a nonnegative integer, width <= 2^-bits.
pub fn sqrt_int_enclosure(n: &BigInt, bits: u32) -> DyadicInterval {
    assert!(!n.is_negative());
    if n.is_zero() {
        return DyadicInterval::from_int(0);
    }
    // integer sqrt of n * 4^bits gives the floor on the 2^-bits grid
    let scaled: BigInt = n << (2 * bits);
    let s = scaled.sqrt();
    let lo = Dyadic::new(s.clone(), bits);
    let hi = Dyadic::new(s + 1, bits);
    DyadicInterval::new(lo, hi)
}

/// Certified enclosure of the real k-th root of a nonnegative rational,
/// width <= 2^-bits. Endpoint exactness is by integer k-th roots.
pub fn kth_root_enclosure(x: &BigRational, k: u32, bits: u32) -> DyadicInterval {
    assert!(k >= 1);
    assert!(!x.is_negative());
    if x.is_zero() {
        return DyadicInterval::from_int(0);
    }
    // floor((x)^(1/k) * 2^bits) = floor((x * 2^(k*bits))^(1/k)) exactly:
    // compute integer kth root of floor(num * 2^(k*bits) / den).
    let scaled = (x * BigRational::from_integer(BigInt::one() << (k * bits)))
        .floor()
        .to_integer();
    let r = scaled.nth_root(k);
    // r <= x^(1/k) * 2^bits < r + 2 (the +2 covers the floor in scaling)
    let lo = Dyadic::new(r.clone(), bits);
    let r1: BigInt = &r + BigInt::one();
    // tighten: if (r+1)^k > scaled the true root is below (r+1)/2^bits
    let hi = if num_traits::pow::pow(r1.clone(), k as usize) > scaled {
        Dyadic::new(r1, bits)
    } else {
        Dyadic::new(&r + BigInt::from(2), bits)
    };
    DyadicInterval::new(lo, hi)
}

/// Which polynomial family: `P_{m,b} = X^m - b X^{m-1} - 1` or
/// `Q_{m,b} = 2 X^m - b X^{m-1} - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FamilyKind {
    P,
    Q,
}

/// Builds the family polynomial together with its isolated largest real root.
/// For the P-kind the root lies in `(b, b+1)`; for the Q-kind it is `> b/2`.
pub fn family(kind: FamilyKind, m: usize, b: u64) -> Result<(IntPolynomial, AlgebraicReal)> {
    if m < 2 {
        return Err(Error::precondition("family requires m >= 2"));
    }
    if b < 1 {
        return Err(Error::precondition("family requires b >= 1"));
    }
    let mut coeffs = vec![BigInt::zero(); m + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[m - 1] = -BigInt::from(b);
    coeffs[m] = match kind {
        FamilyKind::P => BigInt::one(),
        FamilyKind::Q => BigInt::from(2),
    };
    let p = IntPolynomial::new(coeffs);
    let roots = isolate_real_roots(&p);
    let largest = roots
        .into_iter()
        .last()
        .ok_or_else(|| Error::Degenerate("family polynomial has no real root".into()))?;
    let root = AlgebraicReal::from_root_location(p.clone(), largest)?;
    Ok((p, root))
}

fn parse_poly_expr(s: &str) -> Result<IntPolynomial> {
    // grammar: term ((+|-) term)* with term = int | int? x (^ uint)?
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bytes = compact.as_bytes();
    let mut i = 0usize;
    let mut terms: Vec<(BigInt, usize)> = Vec::new();
    while i < bytes.len() {
        let mut sign = BigInt::one();
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: BigInt = if start == i {
            BigInt::one()
        } else {
            compact[start..i]
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {s:?}")))?
        };
        let mut expo = 0usize;
        if i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X') {
            i += 1;
            expo = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(Error::Parse(format!("missing exponent in {s:?}")));
                }
                expo = compact[es..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            }
        } else if start == i {
            return Err(Error::Parse(format!(
                "unexpected token at byte {i} in {s:?}"
            )));
        }
        terms.push((sign * coef, expo));
    }
    let deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut v = vec![BigInt::zero(); deg + 1];
    for (c, e) in terms {
        v[e] += c;
    }
    Ok(IntPolynomial::new(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(v)
    }

    #[test]
    fn invariants_on_p24() {
        // X^2 - 4X - 1
        let p = poly(&[-1, -4, 1]);
        assert_eq!(p.length(), BigInt::from(6));
        assert_eq!(p.height(), BigInt::from(4));
        assert_eq!(p.l2norm_sq(), BigInt::from(18));
    }

    #[test]
    fn invariants_constant_and_chain() {
        let one = poly(&[1]);
        assert_eq!(one.length(), BigInt::from(1));
        assert_eq!(one.height(), BigInt::from(1));
        assert_eq!(one.l2norm_sq(), BigInt::from(1));
        // H <= ||P||_2 <= L for a spread of polynomials
        for v in [
            vec![-1i64, -4, 1],
            vec![3, 0, -2, 7],
            vec![1, 1, 1, 1, 1],
            vec![-5, 2],
        ] {
            let p = poly(&v);
            let h = p.height();
            let l = p.length();
            let n2 = p.l2norm_sq();
            assert!(&h * &h <= n2);
            assert!(n2 <= &l * &l);
        }
    }

    #[test]
    fn cauchy_bounds() {
        assert_eq!(poly(&[-1, -4, 1]).cauchy_root_bound(), rat_int(5));
        // X^m -> 1 by convention
        assert_eq!(poly(&[0, 0, 0, 1]).cauchy_root_bound(), rat_int(1));
        assert_eq!(poly(&[-1, -5, 0, 2]).cauchy_root_bound(), rat(7, 2));
    }

    #[test]
    fn l2_enclosure_brackets_sqrt18() {
        let p = poly(&[-1, -4, 1]);
        let e = p.l2norm_enclosure(40);
        // sqrt(18) = 4.2426...; and M = 2+sqrt5 = 4.2360... <= sqrt(18)
        let (lo, hi) = e.to_rational_endpoints();
        assert!(lo < hi || lo == hi);
        assert!(lo.pow(2) <= rat_int(18) && rat_int(18) <= hi.pow(2));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = poly(&[-1, 0, 1]); // x^2-1
        let b = poly(&[1, 1]); // x+1
        assert_eq!(a.gcd(&b), b);
        let sq = a.mul(&a).mul(&b); // (x^2-1)^2 (x+1)
        let sf = sq.squarefree_part();
        assert_eq!(sf, a.primitive());
    }

    #[test]
    fn family_p_and_q() {
        let (p, root) = family(FamilyKind::P, 2, 4).unwrap();
        assert_eq!(p, poly(&[-1, -4, 1]));
        assert_eq!(p.length(), BigInt::from(6)); // L(P_{m,b}) = b+2
        let iv = root.refine(20).unwrap();
        assert!(iv.lo.to_rational() > rat_int(4));
        assert!(iv.hi.to_rational() < rat_int(5));

        let (q, qroot) = family(FamilyKind::Q, 2, 6).unwrap();
        assert_eq!(q, poly(&[-1, -6, 2]));
        assert_eq!(q.length(), BigInt::from(9)); // L(Q_{m,b}) = b+3
        let iv = qroot.refine(20).unwrap();
        assert!(iv.lo.to_rational() > rat_int(3)); // root > b/2
    }

    #[test]
    fn family_ratio_tends_to_one() {
        // L/(zeta-1) -> 1 monotonically as b grows: evaluate at b=10,100,1000
        let mut prev: Option<BigRational> = None;
        for b in [10u64, 100, 1000] {
            let (p, root) = family(FamilyKind::P, 2, b).unwrap();
            let l = BigRational::from_integer(p.length());
            let iv = root.refine(40).unwrap();
            let (lo, hi) = iv.to_rational_endpoints();
            let upper = &l / (lo - BigRational::one());
            let lower = &l / (hi - BigRational::one());
            assert!(lower > rat_int(1));
            if let Some(pu) = prev {
                assert!(upper < pu, "ratio must shrink with b");
            }
            prev = Some(upper);
        }
    }

    #[test]
    fn parse_poly_strings() {
        assert_eq!(IntPolynomial::parse("x^2-4x-1").unwrap(), poly(&[-1, -4, 1]));
        assert_eq!(IntPolynomial::parse("2x^3 - 5x - 1").unwrap(), poly(&[-1, -5, 0, 2]));
        assert_eq!(IntPolynomial::parse("[ -1, -4, 1 ]").unwrap(), poly(&[-1, -4, 1]));
        assert_eq!(IntPolynomial::parse("x").unwrap(), poly(&[0, 1]));
        assert_eq!(IntPolynomial::parse("-x^2+1").unwrap(), poly(&[1, 0, -1]));
        assert!(IntPolynomial::parse("x^").is_err());
        assert_eq!(format!("{}", poly(&[-1, -4, 1])), "x^2-4x-1");
    }

    #[test]
    fn kth_root_enclosures() {
        let e = kth_root_enclosure(&rat_int(2), 2, 40);
        let (lo, hi) = e.to_rational_endpoints();
        assert!(lo.pow(2) <= rat_int(2) && rat_int(2) <= hi.pow(2));
        assert!(e.width().to_rational() <= rat(1, 1i64 << 39));
        let e6 = kth_root_enclosure(&rat_int(6), 3, 30);
        let (lo, hi) = e6.to_rational_endpoints();
        assert!(lo.pow(3) <= rat_int(6) && rat_int(6) <= hi.pow(3));
    }
}
