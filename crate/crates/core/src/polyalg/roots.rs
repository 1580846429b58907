//! Exact real-root location (Sturm chains over Q, bisection to dyadic
//! isolators) and exact root counting relative to the unit circle.
//!
//! The disk counts use only integer/rational arithmetic:
//! * roots at 0 and at +-1 are divided out,
//! * `g = gcd(Q, reverse(Q))` collects every root on the circle together with
//!   reciprocal off-circle pairs; `g` is palindromic, so `g = X^d * ghat(X + 1/X)`
//!   and a Sturm count of `ghat` on (-2, 2) separates the two kinds,
//! * the remaining factor has no circle roots and no reciprocal pairs; its
//!   inside count comes from the winding number via the Cayley transform
//!   `X = (1+W)/(1-W)` and a Cauchy-index (signed remainder sequence) count of
//!   left-half-plane roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::exact::dyadic::{Dyadic, DyadicInterval};
use crate::{Error, Result};

/// Location of one real root: either an exact dyadic value or an open
/// interval with a strict sign change of the (squarefree) polynomial.
#[derive(Clone, Debug)]
pub enum RootLoc {
    Exact(Dyadic),
    SignChange(DyadicInterval),
}

impl RootLoc {
    pub fn enclosure(&self) -> DyadicInterval {
        match self {
            RootLoc::Exact(d) => DyadicInterval::point(d.clone()),
            RootLoc::SignChange(iv) => iv.clone(),
        }
    }
}

/// Sturm chain of the squarefree part, with sign-variation counting.
pub struct SturmChain {
    chain: Vec<Vec<BigRational>>,
}

fn poly_to_rat(p: &IntPolynomial) -> Vec<BigRational> {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn rat_poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn rat_poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let d = b.len() - 1;
    let lead = b.last().unwrap();
    while r.len() > d {
        let k = r.len() - 1 - d;
        let q = r.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &q * bc;
            r[k + i] -= t;
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

fn normalize_abs_lead(mut p: Vec<BigRational>) -> Vec<BigRational> {
    if let Some(l) = p.last().cloned() {
        let a = if l.is_negative() { -l } else { l };
        if !a.is_zero() && !a.is_one() {
            for c in &mut p {
                *c /= &a;
            }
        }
    }
    p
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let sf = p.squarefree_part();
        let f0 = normalize_abs_lead(poly_to_rat(&sf));
        let f1 = normalize_abs_lead(poly_to_rat(&sf.derivative()));
        let mut chain = vec![f0];
        if !f1.is_empty() {
            chain.push(f1);
        }
        while chain.len() >= 2 && chain.last().unwrap().len() > 1 {
            let n = chain.len();
            let r = rat_poly_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            let neg: Vec<BigRational> = r.into_iter().map(|c| -c).collect();
            chain.push(normalize_abs_lead(neg));
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| {
                let v = rat_poly_eval(p, x);
                if v.is_zero() {
                    0
                } else if v.is_negative() {
                    -1
                } else {
                    1
                }
            })
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Distinct real roots of `p` in the open interval `(a, b)`, exact.
pub fn count_real_roots_in(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let mut n = chain.count_half_open(a, b);
    if n > 0 && sf.eval_rational(b).is_zero() {
        n -= 1;
    }
    n
}

/// Isolates all distinct real roots of `p`, ascending. Each result is either
/// an exact dyadic root or an open dyadic interval with a sign change of the
/// squarefree part and exactly one root inside.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<RootLoc> {
    if p.is_zero() || p.degree() == 0 {
        return vec![];
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let bound = sf.cauchy_root_bound().ceil().to_integer() + BigInt::one();
    let lo = Dyadic::from_int(-bound.clone());
    let hi = Dyadic::from_int(bound);
    let mut out = Vec::new();
    collect_roots(&sf, &chain, lo, hi, &mut out);
    out
}

fn collect_roots(
    sf: &IntPolynomial,
    chain: &SturmChain,
    lo: Dyadic,
    hi: Dyadic,
    out: &mut Vec<RootLoc>,
) {
    let n = chain.count_half_open(&lo.to_rational(), &hi.to_rational());
    if n == 0 {
        return;
    }
    if n == 1 {
        // (lo, hi] holds one root; first handle an exact hit at hi
        if sf.eval_dyadic(&hi).is_zero() {
            out.push(RootLoc::Exact(hi));
            return;
        }
        // shrink until the endpoints show a strict sign change
        let mut a = lo;
        let mut b = hi;
        loop {
            let sa = sf.eval_dyadic(&a);
            let sb = sf.eval_dyadic(&b);
            debug_assert!(!sb.is_zero());
            if !sa.is_zero() && sa.sign() != sb.sign() {
                out.push(RootLoc::SignChange(DyadicInterval::new(a, b)));
                return;
            }
            // sa == 0 (a is a different, adjacent root) or no sign change yet:
            // bisect toward the root, keeping it inside (a, b]
            let mid = a.add(&b).half();
            let sm = sf.eval_dyadic(&mid);
            if sm.is_zero() {
                out.push(RootLoc::Exact(mid));
                return;
            }
            if chain.count_half_open(&mid.to_rational(), &b.to_rational()) == 1 {
                a = mid;
            } else {
                b = mid;
            }
        }
    }
    let mid = lo.add(&hi).half();
    collect_roots(sf, chain, lo, mid.clone(), out);
    collect_roots(sf, chain, mid, hi, out);
}

/// Exact root counts of the squarefree part of `p` relative to the unit
/// circle: (strictly inside, on the circle, strictly outside). Distinct roots;
/// the three counts sum to the squarefree degree.
pub fn count_roots_unit_disk(p: &IntPolynomial) -> Result<(usize, usize, usize)> {
    if p.is_zero() {
        return Err(Error::Degenerate("root counting on the zero polynomial".into()));
    }
    if p.degree() == 0 {
        return Ok((0, 0, 0));
    }
    let mut q = p.squarefree_part();
    let mut inside = 0usize;
    let mut on = 0usize;
    let mut outside = 0usize;

    // roots at 0
    let s = q.trailing_zeros();
    if s > 0 {
        inside += 1; // squarefree: multiplicity one
        q = q.shift_down(s);
    }
    // roots at +-1
    for r in [1i64, -1] {
        let rv = BigInt::from(r);
        if q.eval_int(&rv).is_zero() {
            on += 1;
            q = q.div_exact(&IntPolynomial::from_i64(&[-r, 1]));
        }
    }
    if q.degree() == 0 {
        return Ok((inside, on, outside));
    }

    // circle roots and reciprocal pairs live in g = gcd(q, reverse(q))
    let g = q.gcd(&q.reverse());
    if g.degree() > 0 {
        let d2 = g.degree();
        // after removing +-1 roots g must be palindromic of even degree
        if g != g.reverse().primitive() || d2 % 2 != 0 {
            return Err(Error::Degenerate(
                "unexpected non-palindromic reciprocal gcd".into(),
            ));
        }
        let d = d2 / 2;
        let ghat = chebyshev_contract(&g);
        debug_assert_eq!(ghat.degree(), d);
        let t = count_real_roots_in(
            &ghat,
            &BigRational::from_integer(BigInt::from(-2)),
            &BigRational::from_integer(BigInt::from(2)),
        );
        on += 2 * t;
        inside += d - t;
        outside += d - t;
        q = q.div_exact(&g).primitive();
    }

    // remaining factor: no circle roots, no reciprocal pairs
    let n1 = q.degree();
    if n1 > 0 {
        let h = moebius_disk_to_lhp(&q);
        let p_lhp = count_lhp_roots(&h)?;
        inside += p_lhp;
        outside += n1 - p_lhp;
    }
    Ok((inside, on, outside))
}

/// For palindromic `g` of degree `2d` with `g(+-1) != 0`, the polynomial
/// `ghat` of degree `d` with `g(X) = X^d * ghat(X + 1/X)`.
fn chebyshev_contract(g: &IntPolynomial) -> IntPolynomial {
    let d2 = g.degree();
    let d = d2 / 2;
    // basis C_j with X^j + X^-j = C_j(W): C_0 = 2, C_1 = W, C_j = W*C_{j-1} - C_{j-2};
    // the middle coefficient contributes a_d * 1, not a_d * C_0
    let mut c_prev = IntPolynomial::from_i64(&[2]);
    let mut c_cur = IntPolynomial::x();
    let mut acc = IntPolynomial::monomial(g.coeff(d), 0);
    for j in 1..=d {
        let cj = if j == 1 {
            c_cur.clone()
        } else {
            let next = IntPolynomial::x().mul(&c_cur).sub(&c_prev);
            c_prev = std::mem::replace(&mut c_cur, next);
            c_cur.clone()
        };
        acc = acc.add(&cj.mul_int(&g.coeff(d + j)));
    }
    acc
}

/// Cayley transform sending the open unit disk to the left half-plane:
/// `H(W) = (1-W)^n * Q((1+W)/(1-W))`.
fn moebius_disk_to_lhp(q: &IntPolynomial) -> IntPolynomial {
    let n = q.degree();
    let one_plus = IntPolynomial::from_i64(&[1, 1]);
    let one_minus = IntPolynomial::from_i64(&[1, -1]);
    // precompute powers
    let mut acc = IntPolynomial::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = IntPolynomial::monomial(c.clone(), 0);
        for _ in 0..k {
            term = term.mul(&one_plus);
        }
        for _ in 0..(n - k) {
            term = term.mul(&one_minus);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Number of roots of `h` with negative real part. `h` must have no roots on
/// the imaginary axis and must have full degree (checked indirectly).
fn count_lhp_roots(h: &IntPolynomial) -> Result<usize> {
    let n = h.degree();
    if n == 0 {
        return Ok(0);
    }
    // H(i w) = U(w) + i V(w)
    let mut u = Vec::new();
    let mut v = Vec::new();
    for (k, c) in h.coeffs().iter().enumerate() {
        // i^k cycle: 1, i, -1, -i
        match k % 4 {
            0 => push_coeff(&mut u, k, c.clone()),
            1 => push_coeff(&mut v, k, c.clone()),
            2 => push_coeff(&mut u, k, -c.clone()),
            _ => push_coeff(&mut v, k, -c.clone()),
        }
    }
    let u = IntPolynomial::new(u);
    let v = IntPolynomial::new(v);
    let diff = if n % 2 == 1 {
        cauchy_index(&v, &u)
    } else {
        -cauchy_index(&u, &v)
    };
    // p - q = diff, p + q = n
    let p2 = n as i64 + diff;
    if p2 % 2 != 0 || p2 < 0 || p2 > 2 * n as i64 {
        return Err(Error::Degenerate(format!(
            "inconsistent Cauchy index {diff} for degree {n}"
        )));
    }
    Ok((p2 / 2) as usize)
}

fn push_coeff(v: &mut Vec<BigInt>, k: usize, c: BigInt) {
    while v.len() <= k {
        v.push(BigInt::zero());
    }
    v[k] += c;
}

/// Cauchy index of `g/f` over the whole real line via the signed remainder
/// sequence: `Var(-inf) - Var(+inf)`.
fn cauchy_index(f: &IntPolynomial, g: &IntPolynomial) -> i64 {
    let mut seq: Vec<Vec<BigRational>> = Vec::new();
    let f0 = poly_to_rat(f);
    let f1 = poly_to_rat(g);
    if f0.is_empty() {
        return 0;
    }
    debug_assert!(f1.is_empty() || f0.len() > f1.len(), "cauchy_index wants deg f > deg g");
    seq.push(normalize_abs_lead(f0));
    if !f1.is_empty() {
        seq.push(normalize_abs_lead(f1));
        while seq.last().unwrap().len() > 1 {
            let n = seq.len();
            let r = rat_poly_rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(normalize_abs_lead(r.into_iter().map(|c| -c).collect()));
        }
    }
    let sign_at_inf = |p: &Vec<BigRational>, plus: bool| -> i8 {
        if p.is_empty() {
            return 0;
        }
        let l = p.last().unwrap();
        let mut s: i8 = if l.is_negative() { -1 } else { 1 };
        if !plus && (p.len() - 1) % 2 == 1 {
            s = -s;
        }
        s
    };
    let var = |plus: bool| -> usize {
        let signs: Vec<i8> = seq
            .iter()
            .map(|p| sign_at_inf(p, plus))
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    var(false) as i64 - var(true) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(v)
    }

    #[test]
    fn sturm_counts() {
        let p = poly(&[-2, 0, 1]); // x^2-2
        assert_eq!(count_real_roots_in(&p, &rat_int(-3), &rat_int(3)), 2);
        assert_eq!(count_real_roots_in(&p, &rat_int(0), &rat_int(3)), 1);
        assert_eq!(count_real_roots_in(&p, &rat_int(2), &rat_int(3)), 0);
        // x^2+1: no real roots
        assert_eq!(count_real_roots_in(&poly(&[1, 0, 1]), &rat_int(-9), &rat_int(9)), 0);
    }

    #[test]
    fn isolate_simple() {
        let p = poly(&[-1, -4, 1]); // roots 2 +- sqrt5: -0.236..., 4.236...
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let e0 = roots[0].enclosure();
        let e1 = roots[1].enclosure();
        assert!(e0.hi <= e1.lo, "isolators ordered and disjoint");
        assert!(e0.contains_rational(&rat(-2360680, 10000000)) || {
            let (lo, hi) = e0.to_rational_endpoints();
            lo < rat(-236068, 1000000) && rat(-236068, 1000000) < hi
        });
        assert!(e1.contains_rational(&rat(4236068, 1000000)) || {
            let (lo, hi) = e1.to_rational_endpoints();
            lo < rat(4236068, 1000000) && rat(4236067, 1000000) < hi
        });
    }

    #[test]
    fn isolate_rational_roots_and_clusters() {
        // (2x-1)(x-1)(x-2)(3x-7): roots 1/2, 1, 2, 7/3
        let p = poly(&[-1, 2]).mul(&poly(&[-1, 1])).mul(&poly(&[-2, 1])).mul(&poly(&[-7, 3]));
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 4);
        let expected = [rat(1, 2), rat_int(1), rat_int(2), rat(7, 3)];
        for (loc, want) in roots.iter().zip(expected.iter()) {
            assert!(loc.enclosure().contains_rational(want));
        }
    }

    #[test]
    fn disk_counts_basic() {
        // x^2-4x-1: roots 2+sqrt5 (outside), 2-sqrt5 (~ -0.236, inside)
        assert_eq!(count_roots_unit_disk(&poly(&[-1, -4, 1])).unwrap(), (1, 0, 1));
        // x^2-1: both on the circle
        assert_eq!(count_roots_unit_disk(&poly(&[-1, 0, 1])).unwrap(), (0, 2, 0));
        // x: root at zero
        assert_eq!(count_roots_unit_disk(&poly(&[0, 1])).unwrap(), (1, 0, 0));
        // x^2+1: on the circle
        assert_eq!(count_roots_unit_disk(&poly(&[1, 0, 1])).unwrap(), (0, 2, 0));
        // golden ratio poly x^2-x-1: phi outside, -1/phi inside
        assert_eq!(count_roots_unit_disk(&poly(&[-1, -1, 1])).unwrap(), (1, 0, 1));
    }

    #[test]
    fn disk_counts_salem_type() {
        // Lehmer-like reciprocal quartic x^4-x^3-x^2-x+1: check the split is exact.
        // Its roots: two real (one > 1, one in (0,1)) and a complex pair on the circle.
        let p = poly(&[1, -1, -1, -1, 1]);
        let (i, o, u) = count_roots_unit_disk(&p).unwrap();
        assert_eq!(i + o + u, 4);
        assert_eq!((i, o, u), (1, 2, 1));
    }

    #[test]
    fn disk_counts_products() {
        // (x-2)(x-1/2 scaled): (x-2)(2x-1): one inside, one outside, reciprocal pair
        let p = poly(&[-2, 1]).mul(&poly(&[-1, 2]));
        assert_eq!(count_roots_unit_disk(&p).unwrap(), (1, 0, 1));
        // (x-3)(4x^2+2x+1): root 3 outside; complex pair modulus 1/2 inside
        let p = poly(&[-3, 1]).mul(&poly(&[1, 2, 4]));
        assert_eq!(count_roots_unit_disk(&p).unwrap(), (2, 0, 1));
        // cyclotomic x^2+x+1: both on circle
        assert_eq!(count_roots_unit_disk(&poly(&[1, 1, 1])).unwrap(), (0, 2, 0));
        // (x^2+x+1)(x-2)(3x-1): 2 on, 1 outside, 1 inside
        let p = poly(&[1, 1, 1]).mul(&poly(&[-2, 1])).mul(&poly(&[-1, 3]));
        assert_eq!(count_roots_unit_disk(&p).unwrap(), (1, 2, 1));
        // degenerate Schur-Cohn case: (x-4)(4x^2+2x+1) has |a_0| = |a_m|
        let p = poly(&[-4, 1]).mul(&poly(&[1, 2, 4]));
        assert_eq!(count_roots_unit_disk(&p).unwrap(), (2, 0, 1));
    }

    #[test]
    fn disk_counts_random_integer_root_products() {
        // products of linear factors with known integer/rational roots
        let cases: Vec<(Vec<(i64, i64)>, (usize, usize, usize))> = vec![
            // (num, den) roots: root = num/den
            (vec![(3, 1), (1, 3), (-5, 1)], (1, 0, 2)),
            (vec![(1, 2), (-1, 2), (7, 2)], (2, 0, 1)),
            (vec![(1, 1), (-1, 1), (2, 3)], (1, 2, 0)),
            (vec![(5, 4), (-4, 5), (0, 1)], (2, 0, 1)),
        ];
        for (roots, want) in cases {
            let mut p = IntPolynomial::one();
            for (n, d) in roots {
                p = p.mul(&poly(&[-n, d]));
            }
            assert_eq!(count_roots_unit_disk(&p).unwrap(), want, "roots case");
        }
    }
}
