//! Closed-form threshold calculators: the two-sided brackets for the
//! cardinality-gap quantities `eps~_1(zeta)` and `eps~_2(zeta)`, the
//! Pollington-derived bound `theta(zeta)`, the gap-threshold window in the
//! fixed-epsilon view, the asymmetric-interval bounds for rational ratios,
//! and the finite-n run-length bound. Every emitted bound carries the name of
//! the statement it came from.

mod lacunary;
mod theta;
mod transc;

pub use lacunary::{product_t, tau, TauValue};
pub use theta::{pollington_r, pollington_theta, theta_eta_crossing, theta_rational_exact};
pub use transc::{e_enclosure, ln_enclosure, sqrt_interval};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::rat;
use crate::exact::{ExactOrEnclosure, RealValue};
use crate::polyalg::{classify_pisot_salem, minimal_polynomial, Classification};
use crate::{Error, Result};

/// A bound value together with the statement that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct TaggedBound {
    pub value: ExactOrEnclosure,
    pub source: String,
}

impl TaggedBound {
    fn exact(v: BigRational, source: &str) -> Self {
        TaggedBound { value: ExactOrEnclosure::Exact(v), source: source.into() }
    }

    fn interval(iv: DyadicInterval, source: &str) -> Self {
        TaggedBound { value: ExactOrEnclosure::Enclosure(iv), source: source.into() }
    }

    /// Midpoint used only to *select* the sharpest bound; any candidate is valid.
    fn selection_key(&self) -> BigRational {
        match &self.value {
            ExactOrEnclosure::Exact(r) => r.clone(),
            ExactOrEnclosure::Enclosure(iv) => iv.midpoint().to_rational(),
        }
    }

    pub fn upper_rational(&self) -> BigRational {
        match &self.value {
            ExactOrEnclosure::Exact(r) => r.clone(),
            ExactOrEnclosure::Enclosure(iv) => iv.hi.to_rational(),
        }
    }

    pub fn lower_rational(&self) -> BigRational {
        match &self.value {
            ExactOrEnclosure::Exact(r) => r.clone(),
            ExactOrEnclosure::Enclosure(iv) => iv.lo.to_rational(),
        }
    }
}

/// The two-sided bracket `[max(1, 1/(2 eps) - 1), 1 + 1/eps]` in which the
/// fixed-epsilon cardinality-gap thresholds are proven to lie; the same
/// window applies on the zeta side and the alpha side.
#[derive(Clone, Debug, Serialize)]
pub struct GapThresholds {
    #[serde(serialize_with = "crate::exact::wire::ser_rational")]
    pub lower: BigRational,
    #[serde(serialize_with = "crate::exact::wire::ser_rational")]
    pub upper: BigRational,
}

pub fn gap_thresholds(eps: &BigRational) -> Result<(GapThresholds, GapThresholds)> {
    if !eps.is_positive() {
        return Err(Error::precondition("gap_thresholds needs eps > 0"));
    }
    let lower = (eps.recip() / rat(2, 1) - BigRational::one()).max(BigRational::one());
    let upper = BigRational::one() + eps.recip();
    let w = GapThresholds { lower, upper };
    Ok((w.clone(), w))
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub zeta: RealValue,
    pub eps1_lower: TaggedBound,
    pub eps1_upper: TaggedBound,
    pub eps2_lower: TaggedBound,
    pub eps2_upper: TaggedBound,
    /// `(r, theta(zeta))`; conditional improvement, reported separately.
    pub theta: Option<(u64, DyadicInterval)>,
    pub comparison_lines: Vec<(String, ExactOrEnclosure)>,
    pub gap_thresholds: Option<(GapThresholds, GapThresholds)>,
}

fn pick_sharpest(cands: Vec<TaggedBound>, want_max: bool) -> TaggedBound {
    let mut best: Option<TaggedBound> = None;
    for c in cands {
        best = Some(match best {
            None => c,
            Some(b) => {
                let better = if want_max {
                    c.selection_key() > b.selection_key()
                } else {
                    c.selection_key() < b.selection_key()
                };
                if better {
                    c
                } else {
                    b
                }
            }
        });
    }
    best.expect("at least one candidate bound")
}

/// Enclosure (or exact value) of `1 / (scale * (zeta + shift))`, requiring the
/// denominator to be positive.
fn recip_affine(
    zeta: &RealValue,
    shift: &BigRational,
    scale: &BigRational,
    bits: u32,
) -> Result<ExactOrEnclosure> {
    match zeta {
        RealValue::Rational(z) => {
            let d = scale * (z + shift);
            if !d.is_positive() {
                return Err(Error::Degenerate("nonpositive denominator".into()));
            }
            Ok(ExactOrEnclosure::Exact(d.recip()))
        }
        RealValue::Algebraic(a) => {
            let mut k = bits;
            loop {
                let iv = a.refine(k)?;
                let lo = (iv.lo.to_rational() + shift) * scale;
                let hi = (iv.hi.to_rational() + shift) * scale;
                if lo.is_positive() {
                    let enc =
                        DyadicInterval::from_rational_endpoints(&hi.recip(), &lo.recip(), bits + 4);
                    return Ok(ExactOrEnclosure::Enclosure(enc));
                }
                if k > 1 << 20 {
                    return Err(Error::UndecidableAtPrecision(
                        "denominator sign did not resolve".into(),
                    ));
                }
                k *= 2;
            }
        }
    }
}

/// Endpointwise `min` of a bound with the constant 1/2 (a valid enclosure of
/// the pointwise minimum).
fn min_with_half(b: ExactOrEnclosure) -> ExactOrEnclosure {
    let half = rat(1, 2);
    match b {
        ExactOrEnclosure::Exact(r) => ExactOrEnclosure::Exact(r.min(half)),
        ExactOrEnclosure::Enclosure(iv) => {
            let (lo, hi) = iv.to_rational_endpoints();
            if hi <= half {
                ExactOrEnclosure::Enclosure(iv)
            } else if lo >= half {
                ExactOrEnclosure::Exact(half)
            } else {
                ExactOrEnclosure::Enclosure(DyadicInterval::from_rational_endpoints(
                    &lo, &half, 80,
                ))
            }
        }
    }
}

/// Populates the four `eps~` bounds by the sharpest applicable statements.
/// `l_override` substitutes the polynomial length `L(zeta)` where Dubickas'
/// algebraic bound applies (weakened certified form `1/L`).
pub fn epsilon_bounds(
    zeta: &RealValue,
    l_override: Option<BigInt>,
    bits: u32,
) -> Result<BoundsReport> {
    if zeta.cmp_rational(&BigRational::one()) != Ordering::Greater {
        return Err(Error::precondition("epsilon_bounds needs zeta > 1"));
    }
    let mut eps1_low: Vec<TaggedBound> = vec![TaggedBound::exact(BigRational::zero(), "trivial")];
    let mut eps1_up: Vec<TaggedBound> = vec![TaggedBound {
        value: min_with_half(recip_affine(zeta, &rat(-1, 1), &rat(2, 1), bits)?),
        source: "Thm 2.4".into(),
    }];
    let mut eps2_low: Vec<TaggedBound> = vec![TaggedBound {
        value: recip_affine(zeta, &rat(1, 1), &rat(2, 1), bits)?,
        source: "Thm 2.4".into(),
    }];
    let mut eps2_up: Vec<TaggedBound> = vec![TaggedBound {
        value: min_with_half(recip_affine(zeta, &rat(-1, 1), &rat(1, 1), bits)?),
        source: "Thm 2.4".into(),
    }];

    match zeta {
        RealValue::Rational(z) if z.denom().is_one() => {
            // integer zeta = p
            let p: u64 = z
                .numer()
                .to_string()
                .parse()
                .map_err(|_| Error::precondition("integer zeta too large for tau"))?;
            let t = tau(p, 1, bits)?;
            eps1_low = vec![TaggedBound::exact(BigRational::zero(), "Thm 2.9")];
            eps1_up = vec![TaggedBound::exact(BigRational::zero(), "Thm 2.9")];
            eps2_low.push(TaggedBound::interval(t.value.clone(), "Thm 2.9 (tau)"));
            let up = rat(1, p as i64)
                - BigRational::one() / BigRational::from_integer(BigInt::from(p * p * p + p * p));
            eps2_up.push(TaggedBound::exact(up, "Thm 2.9"));
        }
        RealValue::Rational(z) => {
            // rational zeta = p/q, q >= 2
            let p: u64 = z
                .numer()
                .to_string()
                .parse()
                .map_err(|_| Error::precondition("numerator too large for tau"))?;
            let q: u64 = z
                .denom()
                .to_string()
                .parse()
                .map_err(|_| Error::precondition("denominator too large for tau"))?;
            let t = tau(p, q, bits)?;
            let (pi, qi) = (p as i64, q as i64);
            eps1_low.push(TaggedBound::interval(t.value.clone(), "Eq. (4.4) Dubickas tau"));
            eps1_low.push(TaggedBound::exact(rat(1, pi + qi), "Thm 2.7"));
            eps1_up.push(TaggedBound::exact(
                rat(qi, 2 * (pi - qi)).min(rat(1, 2)),
                "Thm 2.6",
            ));
            if q % 2 == 1 {
                eps1_up.push(TaggedBound::exact(
                    rat(qi - 1, 2 * (pi - qi)).min(rat(1, 2)),
                    "Eq. (2.3) odd-q",
                ));
                eps2_low.push(TaggedBound::exact(rat(qi + 1, 2 * (pi + qi)), "Eq. (2.3) odd-q"));
            }
            if q == 2 {
                eps1_up.push(TaggedBound::exact(rat(1, pi), "Thm 2.6 q=2"));
            }
            eps2_low.push(TaggedBound::interval(t.value.clone(), "Eq. (4.4) Dubickas tau"));
            eps2_low.push(TaggedBound::exact(rat(qi, 2 * (pi + qi)), "Thm 2.6"));
            eps2_up.push(TaggedBound::exact(
                rat(qi - 1, pi - qi).min(rat(1, 2)),
                "Thm 2.6",
            ));
        }
        RealValue::Algebraic(a) => {
            let mp = minimal_polynomial(a)?;
            let l_value = l_override.unwrap_or_else(|| mp.length());
            let inv_l = BigRational::from_integer(l_value).recip();
            let class = classify_pisot_salem(&mp)?.classification;
            match class {
                Classification::Pisot => {
                    eps1_low = vec![TaggedBound::exact(BigRational::zero(), "Thm 1.2 (Pisot)")];
                    eps1_up = vec![TaggedBound::exact(BigRational::zero(), "Thm 1.2 (Pisot)")];
                }
                Classification::SalemCandidate => {}
                _ => {
                    // algebraic, neither Pisot nor Salem
                    eps1_low.push(TaggedBound::exact(inv_l.clone(), "Eq. (4.2) via 1/L"));
                }
            }
            eps2_low.push(TaggedBound::exact(inv_l, "Eq. (4.3) via 1/L"));
        }
    }

    let eps1_lower = pick_sharpest(eps1_low, true);
    let eps1_upper = pick_sharpest(eps1_up, false);
    let eps2_lower = pick_sharpest(eps2_low, true);
    let eps2_upper = pick_sharpest(eps2_up, false);

    // certified ordering of each pair: both bracket the same true quantity,
    // so only an exact disagreement is fatal
    for (lo, hi, which) in [
        (&eps1_lower, &eps1_upper, "eps1"),
        (&eps2_lower, &eps2_upper, "eps2"),
    ] {
        if lo.lower_rational() > hi.upper_rational() {
            return Err(Error::Degenerate(format!(
                "{which} bracket out of order: {} > {}",
                lo.source, hi.source
            )));
        }
    }

    let theta_line = pollington_theta(zeta, bits.min(96))?;
    Ok(BoundsReport {
        zeta: zeta.clone(),
        eps1_lower,
        eps1_upper,
        eps2_lower,
        eps2_upper,
        theta: Some(theta_line),
        comparison_lines: comparison_bounds(zeta, None, bits)?,
        gap_thresholds: None,
    })
}

/// The named comparison bounds from the survey results, each as a certified
/// enclosure. Lines whose hypotheses fail (`zeta <= 3` for Boyd's first
/// bound) are omitted.
pub fn comparison_bounds(
    zeta: &RealValue,
    alpha: Option<&BigRational>,
    bits: u32,
) -> Result<Vec<(String, ExactOrEnclosure)>> {
    if zeta.cmp_rational(&BigRational::one()) != Ordering::Greater {
        return Err(Error::precondition("comparison_bounds needs zeta > 1"));
    }
    if let Some(a) = alpha {
        if *a < BigRational::one() {
            return Err(Error::precondition(
                "comparison lines with a logarithm need alpha >= 1",
            ));
        }
    }
    let mut out: Vec<(String, ExactOrEnclosure)> = Vec::new();
    let ziv = zeta_interval(zeta, bits)?;
    let one = DyadicInterval::from_int(1);

    // Thm 1.4 (Bertin): 1/(2 (1+zeta)^2)
    let b = one.add(&ziv).pow(2).mul_int(&BigInt::from(2));
    out.push((
        "Thm 1.4 Bertin".into(),
        ExactOrEnclosure::Enclosure(one.div_outward(&b, bits)?),
    ));

    if let Some(a) = alpha {
        let e = e_enclosure(bits + 8);
        let ln_a = ln_enclosure(a, bits + 8)?;
        let log_term = ln_a.add(&one);
        // Thm 1.5: 1/(2 e zeta (zeta+1) (log alpha + 1))
        let den = e
            .mul(&ziv)
            .mul(&ziv.add(&one))
            .mul(&log_term)
            .mul_int(&BigInt::from(2));
        out.push((
            "Thm 1.5".into(),
            ExactOrEnclosure::Enclosure(one.div_outward(&den, bits)?),
        ));
        // Thm 1.7: 1/(e (zeta+1)^2 (sqrt(log alpha) + 2))
        let sqrt_ln = sqrt_interval(&ln_a, bits + 8)?;
        let den = e
            .mul(&ziv.add(&one).pow(2))
            .mul(&sqrt_ln.add(&DyadicInterval::from_int(2)));
        out.push((
            "Thm 1.7".into(),
            ExactOrEnclosure::Enclosure(one.div_outward(&den, bits)?),
        ));
        // Thm 1.6 (Boyd, second bound): 5/(e zeta (zeta+1) (log alpha + 1))
        let den = e.mul(&ziv).mul(&ziv.add(&one)).mul(&log_term);
        out.push((
            "Thm 1.6 Boyd (log form)".into(),
            ExactOrEnclosure::Enclosure(DyadicInterval::from_int(5).div_outward(&den, bits)?),
        ));
    }

    // Thm 1.6 (Boyd, first bound): 1/((zeta-1)(zeta-3)) for zeta > 3
    if zeta.cmp_rational(&rat(3, 1)) == Ordering::Greater {
        let den = ziv
            .sub(&DyadicInterval::from_int(1))
            .mul(&ziv.sub(&DyadicInterval::from_int(3)));
        if !den.contains_zero() {
            out.push((
                "Thm 1.6 Boyd".into(),
                ExactOrEnclosure::Enclosure(one.div_outward(&den, bits)?),
            ));
        }
    }
    Ok(out)
}

fn zeta_interval(zeta: &RealValue, bits: u32) -> Result<DyadicInterval> {
    Ok(match zeta {
        RealValue::Rational(z) => DyadicInterval::from_rational_outward(z, bits + 8),
        RealValue::Algebraic(a) => a.refine(bits + 8)?,
    })
}

/// The asymmetric-interval facts for a rational ratio `p/q`.
#[derive(Clone, Debug, Serialize)]
pub struct AsymmetricReport {
    pub p: u64,
    pub q: u64,
    /// Tijdeman: `{alpha (p/q)^n}` can stay in `[0, (q-1)/(p-q)]`.
    #[serde(serialize_with = "crate::exact::wire::ser_rational")]
    pub tijdeman_upper: BigRational,
    /// Dubickas: `limsup - liminf >= 1/p` for non-integer ratios.
    #[serde(serialize_with = "crate::exact::wire::ser_rational")]
    pub gap_lower: BigRational,
    /// The 3/2-problem refinement: gap `>= 1/3` for p/q = 3/2.
    #[serde(serialize_with = "crate::exact::wire::ser_opt_rational")]
    pub three_halves_gap: Option<BigRational>,
    /// `e(q/p) = 1 - q/p` when `p+q` is even, else 1.
    #[serde(serialize_with = "crate::exact::wire::ser_rational")]
    pub e_factor: BigRational,
    /// Half-centered bound `(1 - e(q/p) T(q/p)) / (2q)` on
    /// `inf_alpha limsup ||alpha (p/q)^n - 1/2||`.
    pub half_centered: DyadicInterval,
}

pub fn asymmetric_bounds(p: u64, q: u64, bits: u32) -> Result<AsymmetricReport> {
    if !(p > q && q >= 1) || num_integer::gcd(p, q) != 1 {
        return Err(Error::precondition("asymmetric_bounds needs coprime p > q >= 1"));
    }
    let (pi, qi) = (p as i64, q as i64);
    let e_factor = if (p + q) % 2 == 0 {
        BigRational::one() - rat(qi, pi)
    } else {
        BigRational::one()
    };
    let t = product_t(&rat(qi, pi), bits)?;
    let (tlo, thi) = t.to_rational_endpoints();
    let hc_lo = (BigRational::one() - &e_factor * thi) / rat(2 * qi, 1);
    let hc_hi = (BigRational::one() - &e_factor * tlo) / rat(2 * qi, 1);
    Ok(AsymmetricReport {
        p,
        q,
        tijdeman_upper: rat(qi - 1, pi - qi),
        gap_lower: rat(1, pi),
        three_halves_gap: if (p, q) == (3, 2) { Some(rat(1, 3)) } else { None },
        e_factor,
        half_centered: DyadicInterval::from_rational_endpoints(&hc_lo, &hc_hi, bits + 4),
    })
}

/// Exact finite-n form of the run-length bound: with
/// `A_n = <alpha (p/q)^n> != 0`, a window run starting at `n` has length
/// `l <= floor(log_q |A_n|)`.
#[derive(Clone, Debug, Serialize)]
pub struct RunBound {
    #[serde(serialize_with = "crate::exact::wire::ser_bigint")]
    pub a_n: BigInt,
    pub l_max: u64,
}

pub fn hundertt_run_bound(p: u64, q: u64, alpha: &BigRational, n: u64) -> Result<RunBound> {
    if !(p > q && q >= 2) || num_integer::gcd(p, q) != 1 {
        return Err(Error::precondition("run bound needs coprime p > q >= 2"));
    }
    if alpha.is_zero() {
        return Err(Error::precondition("run bound needs alpha != 0"));
    }
    // n0 condition: |alpha| (p/q)^n >= 1, i.e. |a| p^n >= b q^n
    let pn = BigInt::from(p).pow(n as u32);
    let qn = BigInt::from(q).pow(n as u32);
    if alpha.numer().abs() * pn.clone() < alpha.denom() * qn.clone() {
        return Err(Error::precondition(
            "n below the paper's n0: |alpha| (p/q)^n < 1 cannot guarantee A_n != 0",
        ));
    }
    let x = alpha * BigRational::new(pn, qn);
    let a_n = crate::exact::rational::nearest(&x);
    let a_abs = a_n.abs();
    debug_assert!(a_abs >= BigInt::one());
    let qb = BigInt::from(q);
    let mut l_max = 0u64;
    let mut power = qb.clone();
    while power <= a_abs {
        l_max += 1;
        power *= &qb;
    }
    Ok(RunBound { a_n, l_max })
}
