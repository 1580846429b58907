//! Factorization of integer polynomials into irreducibles: Berlekamp over a
//! small prime, quadratic Hensel lifting of the factor tree, and subset
//! recombination (Zassenhaus). Inputs here are small-degree, small-height
//! polynomials, so no effort is spent on asymptotics.
//!
//! The public entry points are [`factor_primitive`] (full factorization with
//! multiplicities of the primitive part) and [`is_irreducible`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::{Error, Result};

const SMALL_PRIMES: [u64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Irreducible factors (primitive, positive leading coefficient) with
/// multiplicities of the primitive part of `p`. Constant content is dropped.
pub fn factor_primitive(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::Degenerate("factoring the zero polynomial".into()));
    }
    let mut f = p.primitive();
    let mut out: Vec<(IntPolynomial, usize)> = Vec::new();
    // peel off X^k
    let s = f.trailing_zeros();
    if s > 0 {
        out.push((IntPolynomial::x(), s));
        f = f.shift_down(s);
    }
    if f.degree() == 0 {
        return Ok(out);
    }
    let sf = f.squarefree_part();
    let irr = factor_squarefree(&sf)?;
    for g in irr {
        // multiplicity by repeated division
        let mut m = 0usize;
        let mut rest = f.clone();
        while let Some(q) = rest.divides(&g) {
            m += 1;
            rest = q;
            if rest.degree() == 0 {
                break;
            }
        }
        debug_assert!(m >= 1);
        out.push((g, m));
    }
    Ok(out)
}

/// `Ok(())` when the primitive part of `p` is irreducible over Q; otherwise a
/// nontrivial witness factor is returned in the error.
pub fn is_irreducible(p: &IntPolynomial) -> Result<()> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::Degenerate(
            "irreducibility is asked of a nonconstant polynomial".into(),
        ));
    }
    if p.degree() == 1 {
        return Ok(());
    }
    let factors = factor_primitive(p)?;
    let nontrivial: Vec<_> = factors
        .iter()
        .flat_map(|(g, m)| std::iter::repeat(g).take(*m))
        .collect();
    if nontrivial.len() == 1 {
        return Ok(());
    }
    Err(Error::Reducible {
        factor: nontrivial[0].to_string(),
    })
}

/// Factor a primitive squarefree polynomial into irreducibles.
fn factor_squarefree(f: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let n = f.degree();
    if n <= 1 {
        return Ok(vec![f.primitive()]);
    }
    // monicize: f*(y) = lc^(n-1) f(y/lc) is monic with integer coefficients
    let lc = f.leading();
    let fstar = monicize(f);
    debug_assert!(fstar.is_monic());

    // pick a prime where fstar stays squarefree
    let mut chosen: Option<(u64, Vec<Vec<u64>>)> = None;
    for &p in SMALL_PRIMES.iter() {
        if (f.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod(&fstar, p);
        if fp.len() != n + 1 {
            continue; // degree dropped (cannot happen for monic, but keep the guard)
        }
        if !modp_squarefree(&fp, p) {
            continue;
        }
        let fac = berlekamp(&fp, p);
        match &chosen {
            Some((_, best)) if best.len() <= fac.len() => {}
            _ => chosen = Some((p, fac)),
        }
        if chosen.as_ref().map(|(_, v)| v.len()) == Some(1) {
            break;
        }
    }
    let (p, modular) = chosen.ok_or_else(|| {
        Error::Degenerate("no usable small prime for factorization".into())
    })?;
    if modular.len() == 1 {
        return Ok(vec![f.primitive()]);
    }

    // lift to p^a > 2*B with B a factor-coefficient bound
    let b = factor_coeff_bound(&fstar);
    let target: BigInt = &b * 2 + 1;
    let mut modulus = BigInt::from(p);
    let mut steps = 0u32;
    while modulus <= target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = hensel_lift_tree(&fstar, &modular, p, steps)?;

    // recombination over subsets (everything monic)
    let mut avail: Vec<Vec<BigInt>> = lifted;
    let mut remaining = fstar.clone();
    let mut star_factors: Vec<IntPolynomial> = Vec::new();
    let mut size = 1usize;
    while avail.len() > 0 && size <= avail.len() {
        let mut found = true;
        while found && size * 2 <= avail.len() {
            found = false;
            let idxs: Vec<usize> = (0..avail.len()).collect();
            for combo in combinations(&idxs, size) {
                let mut prod = vec![BigInt::one()];
                for &i in &combo {
                    prod = modpoly_mul(&prod, &avail[i], &modulus);
                }
                let cand = symmetric_poly(&prod, &modulus);
                if let Some(q) = remaining.divides(&cand) {
                    star_factors.push(cand.primitive());
                    remaining = q;
                    // remove used modular factors
                    let mut keep = Vec::new();
                    for (i, fpoly) in avail.into_iter().enumerate() {
                        if !combo.contains(&i) {
                            keep.push(fpoly);
                        }
                    }
                    avail = keep;
                    found = true;
                    break;
                }
            }
        }
        size += 1;
    }
    if remaining.degree() > 0 {
        star_factors.push(remaining.primitive());
    }

    // map factors of fstar back to factors of f: G(y) -> pp(G(lc * x))
    let mut result: Vec<IntPolynomial> = star_factors
        .iter()
        .map(|g| substitute_scale(g, &lc).primitive())
        .collect();
    result.sort_by_key(|g| (g.degree(), g.coeffs().to_vec()));
    // sanity: product of results equals +-f up to content
    let mut prod = IntPolynomial::one();
    for g in &result {
        prod = prod.mul(g);
    }
    debug_assert_eq!(prod.primitive(), f.primitive());
    Ok(result)
}

/// `f*(y) = lc^(deg-1) * f(y/lc)`: monic integer polynomial.
fn monicize(f: &IntPolynomial) -> IntPolynomial {
    let n = f.degree();
    let lc = f.leading();
    let mut v = Vec::with_capacity(n + 1);
    // coefficient of y^k is a_k * lc^(n-1-k)
    for (k, a) in f.coeffs().iter().enumerate() {
        let e = (n - 1) as i64 - k as i64;
        let c = if e >= 0 {
            a * num_traits::pow::pow(lc.clone(), e as usize)
        } else {
            // k = n: a_n * lc^-1 = 1 (a_n = lc)
            BigInt::one()
        };
        v.push(c);
    }
    IntPolynomial::new(v)
}

/// `G(lc * x)` with integer coefficients.
fn substitute_scale(g: &IntPolynomial, lc: &BigInt) -> IntPolynomial {
    let mut v = Vec::with_capacity(g.coeffs().len());
    let mut power = BigInt::one();
    for c in g.coeffs() {
        v.push(c * &power);
        power *= lc;
    }
    IntPolynomial::new(v)
}

/// Mignotte-style bound: any monic factor of monic `f` has coefficients
/// bounded by `2^deg(f) * (||f||_2 + 1)`.
fn factor_coeff_bound(f: &IntPolynomial) -> BigInt {
    let l2 = f.l2norm_sq().sqrt() + 1;
    (BigInt::one() << f.degree()) * l2
}

fn reduce_mod(f: &IntPolynomial, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            r.to_string().parse::<u64>().unwrap()
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

// ----- F_p[x] arithmetic on Vec<u64> (ascending, trimmed) -----

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut v);
    v
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // Fermat
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn fp_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let d = b.len() - 1;
    let binv = fp_inv(*b.last().unwrap(), p);
    if r.len() <= d {
        return (vec![], r);
    }
    let mut q = vec![0u64; r.len() - d];
    while r.len() > d {
        let k = r.len() - 1 - d;
        let c = *r.last().unwrap() * binv % p;
        q[k] = c;
        for (i, &bc) in b.iter().enumerate() {
            let sub = c * bc % p;
            r[k + i] = (r[k + i] + p - sub) % p;
        }
        fp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    fp_trim(&mut q);
    (q, r)
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = fp_divmod(&x, &y, p);
        x = y;
        y = r;
    }
    // monic
    if let Some(&l) = x.last() {
        let inv = fp_inv(l, p);
        for c in &mut x {
            *c = *c * inv % p;
        }
    }
    x
}

fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * (i as u64 % p) % p)
        .collect();
    fp_trim(&mut v);
    v
}

fn modp_squarefree(f: &[u64], p: u64) -> bool {
    let d = fp_derivative(f, p);
    if d.is_empty() {
        return false;
    }
    fp_gcd(f, &d, p).len() == 1
}

/// Extended Euclid in F_p[x]: returns (s, t) with s*a + t*b = 1 (a, b coprime).
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divmod(&r0, &r1, p);
        let qs = fp_mul(&q, &s1, p);
        let qt = fp_mul(&q, &t1, p);
        let ns = fp_sub(&s0, &qs, p);
        let nt = fp_sub(&t0, &qt, p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, ns);
        t0 = std::mem::replace(&mut t1, nt);
    }
    // r0 is a constant gcd; scale to 1
    assert_eq!(r0.len(), 1, "fp_bezout on non-coprime inputs");
    let inv = fp_inv(r0[0], p);
    let scale = |v: &[u64]| -> Vec<u64> { v.iter().map(|&c| c * inv % p).collect() };
    (scale(&s0), scale(&t0))
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        v[i] = (x + p - y) % p;
    }
    fp_trim(&mut v);
    v
}

/// Berlekamp factorization of a monic squarefree `f` over F_p into monic
/// irreducible factors.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    // x^p mod f
    let xp = fp_powmod_x(p, f, p);
    // Frobenius matrix columns: (x^p)^i mod f
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut col = cur.clone();
        col.resize(n, 0);
        cols.push(col);
        cur = {
            let prod = fp_mul(&cur, &xp, p);
            fp_divmod(&prod, f, p).1
        };
    }
    // M = Frobenius - I, row-major n x n: entry (r, c) = cols[c][r] - delta
    let mut m = vec![vec![0u64; n]; n];
    for c in 0..n {
        for r in 0..n {
            let mut e = cols[c][r] % p;
            if r == c {
                e = (e + p - 1) % p;
            }
            m[r][c] = e;
        }
    }
    let basis = fp_nullspace(&m, p);
    let r = basis.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut factors: Vec<Vec<u64>> = vec![f.to_vec()];
    for v in basis.iter() {
        if factors.len() == r {
            break;
        }
        let mut vpoly = v.clone();
        fp_trim(&mut vpoly);
        if vpoly.len() <= 1 {
            continue; // constant vector splits nothing
        }
        let mut next: Vec<Vec<u64>> = Vec::new();
        for u in factors.into_iter() {
            if u.len() <= 2 || next.len() + 1 == r {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in 0..p {
                if pieces.iter().all(|w| w.len() <= 2) {
                    break;
                }
                let mut vp = vpoly.clone();
                if vp.is_empty() {
                    vp = vec![0];
                }
                // v - c
                let mut vc = vp.clone();
                if vc.is_empty() {
                    vc.push(0);
                }
                vc[0] = (vc[0] + p - c % p) % p;
                fp_trim(&mut vc);
                let mut newpieces = Vec::new();
                for w in pieces.into_iter() {
                    if w.len() <= 2 {
                        newpieces.push(w);
                        continue;
                    }
                    let g = if vc.is_empty() { vec![] } else { fp_gcd(&w, &vc, p) };
                    if g.len() > 1 && g.len() < w.len() {
                        let (q, rem) = fp_divmod(&w, &g, p);
                        debug_assert!(rem.is_empty());
                        newpieces.push(g);
                        newpieces.push(monic_fp(q, p));
                    } else {
                        newpieces.push(w);
                    }
                }
                pieces = newpieces;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors.into_iter().map(|f| monic_fp(f, p)).collect()
}

fn monic_fp(mut f: Vec<u64>, p: u64) -> Vec<u64> {
    if let Some(&l) = f.last() {
        if l != 1 {
            let inv = fp_inv(l, p);
            for c in &mut f {
                *c = *c * inv % p;
            }
        }
    }
    f
}

/// `x^e mod f` over F_p.
fn fp_powmod_x(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = vec![0u64, 1]; // x
    base = fp_divmod(&base, f, p).1;
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            let prod = fp_mul(&result, &base, p);
            result = fp_divmod(&prod, f, p).1;
        }
        let sq = fp_mul(&base, &base, p);
        base = fp_divmod(&sq, f, p).1;
        exp >>= 1;
    }
    result
}

/// Nullspace basis of an n x n matrix over F_p (row-major).
fn fp_nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivot_col_of_row = vec![usize::MAX; n];
    let mut row = 0usize;
    for col in 0..n {
        let mut sel = None;
        for r in row..n {
            if a[r][col] != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        a.swap(row, sel);
        let inv = fp_inv(a[row][col], p);
        for c in 0..n {
            a[row][c] = a[row][c] * inv % p;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..n {
                    let sub = factor * a[row][c] % p;
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row[..row].to_vec();
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !is_pivot(*c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot var = -a[r][free]
            v[pc] = (p - a[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ----- Z/m[x] arithmetic for Hensel lifting (m = p^(2^k)) -----

fn modpoly_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn modpoly_reduce(v: &mut [BigInt], m: &BigInt) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
}

fn modpoly_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    modpoly_reduce(&mut v, m);
    modpoly_trim(&mut v);
    v
}

fn modpoly_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut v = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut s = BigInt::zero();
        if let Some(x) = a.get(i) {
            s += x;
        }
        if let Some(y) = b.get(i) {
            s += y;
        }
        v[i] = s.mod_floor(m);
    }
    modpoly_trim(&mut v);
    v
}

fn modpoly_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let neg: Vec<BigInt> = b.iter().map(|c| -c).collect();
    modpoly_add(a, &neg, m)
}

/// Division by a monic polynomial in Z/m[x].
fn modpoly_divmod_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().map_or(false, |c| c.is_one()));
    let mut r = a.to_vec();
    modpoly_trim(&mut r);
    let d = b.len() - 1;
    if r.len() <= d {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - d];
    while r.len() > d {
        let k = r.len() - 1 - d;
        let c = r.last().unwrap().clone();
        q[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = (&c * bc).mod_floor(m);
            r[k + i] = (&r[k + i] - t).mod_floor(m);
        }
        modpoly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    modpoly_trim(&mut q);
    (q, r)
}

fn u64poly_to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Symmetric representative in (-m/2, m/2] of each coefficient.
fn symmetric_poly(v: &[BigInt], m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    let coeffs = v
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Lift the modular factorization of monic `f` from mod p to mod p^(2^steps),
/// returning the lifted monic factors.
fn hensel_lift_tree(
    f: &IntPolynomial,
    factors: &[Vec<u64>],
    p: u64,
    steps: u32,
) -> Result<Vec<Vec<BigInt>>> {
    let fcoeffs: Vec<BigInt> = f.coeffs().to_vec();
    lift_group(&fcoeffs, factors, p, steps)
}

fn lift_group(
    f: &[BigInt],
    factors: &[Vec<u64>],
    p: u64,
    steps: u32,
) -> Result<Vec<Vec<BigInt>>> {
    if factors.len() == 1 {
        // the lifted factor equals f reduced mod p^(2^steps)
        let mut modulus = BigInt::from(p);
        for _ in 0..steps {
            modulus = &modulus * &modulus;
        }
        let mut v = f.to_vec();
        modpoly_reduce(&mut v, &modulus);
        modpoly_trim(&mut v);
        return Ok(vec![v]);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let pbig = BigInt::from(p);
    let gl: Vec<u64> = left
        .iter()
        .fold(vec![1u64], |acc, f| fp_mul(&acc, f, p));
    let gr: Vec<u64> = right
        .iter()
        .fold(vec![1u64], |acc, f| fp_mul(&acc, f, p));
    let (s, t) = fp_bezout(&gl, &gr, p);
    let (g2, h2) = hensel_pair(
        f,
        &u64poly_to_big(&gl),
        &u64poly_to_big(&gr),
        &u64poly_to_big(&s),
        &u64poly_to_big(&t),
        &pbig,
        steps,
    )?;
    let mut out = lift_group(&g2, left, p, steps)?;
    out.extend(lift_group(&h2, right, p, steps)?);
    Ok(out)
}

/// Quadratic Hensel: given f = g*h (mod p) with s*g + t*h = 1 (mod p), h and g
/// monic, lift to modulus p^(2^steps).
#[allow(clippy::too_many_arguments)]
fn hensel_pair(
    f: &[BigInt],
    g0: &[BigInt],
    h0: &[BigInt],
    s0: &[BigInt],
    t0: &[BigInt],
    p: &BigInt,
    steps: u32,
) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let mut m = p.clone();
    let mut g = g0.to_vec();
    let mut h = h0.to_vec();
    let mut s = s0.to_vec();
    let mut t = t0.to_vec();
    for _ in 0..steps {
        let m2 = &m * &m;
        // e = f - g h mod m2
        let gh = modpoly_mul(&g, &h, &m2);
        let e = modpoly_sub(f, &gh, &m2);
        // s e = q h + r
        let se = modpoly_mul(&s, &e, &m2);
        let (q, r) = modpoly_divmod_monic(&se, &h, &m2);
        // g* = g + t e + q g ; h* = h + r
        let te = modpoly_mul(&t, &e, &m2);
        let qg = modpoly_mul(&q, &g, &m2);
        let gstar = modpoly_add(&modpoly_add(&g, &te, &m2), &qg, &m2);
        let hstar = modpoly_add(&h, &r, &m2);
        // fix Bezout: b = s g* + t h* - 1
        let sg = modpoly_mul(&s, &gstar, &m2);
        let th = modpoly_mul(&t, &hstar, &m2);
        let mut b = modpoly_add(&sg, &th, &m2);
        b = modpoly_sub(&b, &[BigInt::one()], &m2);
        let sb = modpoly_mul(&s, &b, &m2);
        let (c, d) = modpoly_divmod_monic(&sb, &hstar, &m2);
        let sstar = modpoly_sub(&s, &d, &m2);
        let tb = modpoly_mul(&t, &b, &m2);
        let cg = modpoly_mul(&c, &gstar, &m2);
        let tstar = modpoly_sub(&modpoly_sub(&t, &tb, &m2), &cg, &m2);
        g = gstar;
        h = hstar;
        s = sstar;
        t = tstar;
        m = m2;
    }
    Ok((g, h))
}

/// All `size`-element index combinations (small inputs only).
fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(v)
    }

    #[test]
    fn irreducible_quadratics() {
        assert!(is_irreducible(&poly(&[-1, -4, 1])).is_ok()); // x^2-4x-1
        assert!(is_irreducible(&poly(&[1, -3, 1])).is_ok()); // x^2-3x+1
        assert!(is_irreducible(&poly(&[-1, -6, 2])).is_ok()); // 2x^2-6x-1
        assert!(is_irreducible(&poly(&[1, 1, 1])).is_ok()); // x^2+x+1
    }

    #[test]
    fn reducible_with_witness() {
        // (x-1)(x+2)
        let p = poly(&[-1, 1]).mul(&poly(&[2, 1]));
        let e = is_irreducible(&p).unwrap_err();
        match e {
            Error::Reducible { factor } => {
                assert!(factor == "x-1" || factor == "x+2", "got {factor}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn factor_products_small() {
        let cases: Vec<Vec<IntPolynomial>> = vec![
            vec![poly(&[-1, 1]), poly(&[1, 1])],
            vec![poly(&[-2, 1]), poly(&[-1, 2])],
            vec![poly(&[1, 1, 1]), poly(&[-2, 1]), poly(&[-1, 3])],
            vec![poly(&[-1, -4, 1]), poly(&[1, -3, 1])],
            vec![poly(&[2, 0, 1]), poly(&[-3, 1])], // x^2+2 irreducible
        ];
        for factors in cases {
            let mut p = IntPolynomial::one();
            for f in &factors {
                p = p.mul(f);
            }
            let found = factor_primitive(&p).unwrap();
            let total: usize = found.iter().map(|(g, m)| g.degree() * m).sum();
            assert_eq!(total, p.degree());
            // every found factor divides p and is itself irreducible by rational-root
            for (g, _) in &found {
                assert!(p.divides(g).is_some(), "{g} must divide {p}");
            }
            // and reassembling gives the primitive part back
            let mut prod = IntPolynomial::one();
            for (g, m) in &found {
                for _ in 0..*m {
                    prod = prod.mul(g);
                }
            }
            assert_eq!(prod.primitive(), p.primitive());
        }
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x-1)^2 (x+3)
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[3, 1]));
        let found = factor_primitive(&p).unwrap();
        let mut mult_of_xm1 = 0;
        for (g, m) in &found {
            if *g == poly(&[-1, 1]) {
                mult_of_xm1 = *m;
            }
        }
        assert_eq!(mult_of_xm1, 2);
    }

    #[test]
    fn family_polys_irreducible() {
        // P_{m,b} for the b >= 4 grid is irreducible; b in {1,2,3} only at m = 2
        for m in 2..=6usize {
            for b in [4i64, 12] {
                let mut v = vec![0i64; m + 1];
                v[0] = -1;
                v[m - 1] = -b;
                v[m] = 1;
                let p = poly(&v);
                assert!(is_irreducible(&p).is_ok(), "P_{{{m},{b}}} = {p}");
            }
        }
        for b in [1i64, 2, 3] {
            assert!(is_irreducible(&poly(&[-1, -b, 1])).is_ok());
        }
        // X^5 - X^4 - 1 = (X^2 - X + 1)(X^3 - X - 1): reducible, with witness
        let p = poly(&[-1, 0, 0, 0, -1, 1]);
        match is_irreducible(&p) {
            Err(Error::Reducible { factor }) => {
                assert!(factor == "x^2-x+1" || factor == "x^3-x-1", "got {factor}");
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_like_products() {
        // x^4 - 1 = (x-1)(x+1)(x^2+1)
        let p = poly(&[-1, 0, 0, 0, 1]);
        let found = factor_primitive(&p).unwrap();
        assert_eq!(found.len(), 3);
    }
}
