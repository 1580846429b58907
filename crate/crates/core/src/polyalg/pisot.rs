//! Pisot/Salem classification of irreducible integer polynomials, the
//! sufficient criterion `2(zeta - 1) > L(zeta)`, and the Mahler-measure
//! bracket used for the consistency check `L >= 2M` whenever a root lies on
//! the unit circle.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::roots::{count_roots_unit_disk, isolate_real_roots};
use super::{factor::is_irreducible, IntPolynomial};
use crate::exact::dyadic::DyadicInterval;
use crate::exact::AlgebraicReal;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Pisot,
    /// Certified Salem configuration: monic, one real root > 1, the rest in
    /// the closed disk with a symbolically verified root on the circle.
    SalemCandidate,
    /// Has a real root > 1 but fails the Pisot/Salem conditions.
    Neither,
    /// No real root > 1; the Pisot/Salem question does not apply.
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct PisotReport {
    pub polynomial: IntPolynomial,
    pub classification: Classification,
    pub largest_real_root: Option<AlgebraicReal>,
    pub criterion_2_1: bool,
    /// (inside open disk, on circle, outside), distinct roots of the polynomial.
    pub root_counts: (usize, usize, usize),
    /// Certified two-sided bracket for the Mahler measure `M(P)`:
    /// lower from outside real-root moduli, upper from the 2-norm.
    pub mahler_bracket: DyadicInterval,
    /// `L(P) >= 2 * lower(M(P))`, evaluated when a circle root exists.
    pub dobrowolski_consistent: Option<bool>,
}

/// Largest real root of `p` as an algebraic real, if any.
pub fn largest_real_root(p: &IntPolynomial) -> Option<AlgebraicReal> {
    let locs = isolate_real_roots(p);
    let last = locs.into_iter().last()?;
    AlgebraicReal::from_root_location(p.clone(), last).ok()
}

/// The true minimal polynomial of the value: the unique irreducible factor of
/// the stored (squarefree) polynomial that vanishes on the isolator.
pub fn minimal_polynomial(x: &AlgebraicReal) -> Result<IntPolynomial> {
    let stored = x.minpoly();
    let factors = super::factor::factor_primitive(stored)?;
    if factors.len() == 1 && factors[0].1 == 1 {
        return Ok(factors.into_iter().next().unwrap().0);
    }
    let iv = x.isolator();
    for (g, _) in factors {
        if g.degree() == 0 {
            continue;
        }
        let hit = if iv.lo == iv.hi {
            g.eval_dyadic(&iv.lo).is_zero()
        } else {
            let (lo, hi) = iv.to_rational_endpoints();
            super::roots::count_real_roots_in(&g, &lo, &hi) == 1
        };
        if hit {
            return Ok(g);
        }
    }
    Err(Error::Degenerate(
        "no irreducible factor vanishes on the isolator".into(),
    ))
}

/// Certified lower bound on `M(P) = |a_m| * prod max(1, |root|)`: the leading
/// coefficient times the product of lower enclosures of the moduli of the
/// *real* roots outside the unit disk (complex pairs contribute 1).
fn mahler_lower(p: &IntPolynomial, bits: u32) -> Result<DyadicInterval> {
    let mut acc = DyadicInterval::from_int(p.leading().abs());
    for loc in isolate_real_roots(p) {
        let root = AlgebraicReal::from_root_location(p.clone(), loc)?;
        let one = BigRational::one();
        let outside = root.cmp_rational(&one) == Ordering::Greater
            || root.cmp_rational(&-one) == Ordering::Less;
        if outside {
            let iv = root.refine(bits)?.abs();
            acc = acc.mul(&iv);
        }
    }
    Ok(acc)
}

/// Full classification. Precondition: `p` irreducible over Q (checked; a
/// reducible input is rejected with the witness factor).
pub fn classify_pisot_salem(p: &IntPolynomial) -> Result<PisotReport> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::precondition("classification needs a nonconstant polynomial"));
    }
    is_irreducible(p)?;
    let prim = p.primitive();
    let counts = count_roots_unit_disk(&prim)?;
    let largest = largest_real_root(&prim);
    let has_root_gt_one = largest
        .as_ref()
        .map(|r| r.cmp_rational(&BigRational::one()) == Ordering::Greater)
        .unwrap_or(false);

    // monic-ness of the minimal polynomial in lowest terms = algebraic integer
    let monic = prim.is_monic();
    let classification = if !has_root_gt_one {
        Classification::NotApplicable
    } else if monic && counts.2 == 1 && counts.1 == 0 {
        Classification::Pisot
    } else if monic && counts.2 == 1 && counts.1 >= 1 {
        Classification::SalemCandidate
    } else {
        Classification::Neither
    };

    let bits = 48;
    let m_lower = mahler_lower(&prim, bits)?;
    let m_upper = prim.l2norm_enclosure(bits);
    let mahler_bracket = DyadicInterval::new(m_lower.lo.clone(), m_upper.hi.clone());

    let dobrowolski_consistent = if counts.1 > 0 {
        // a root on the circle forces L(P) >= 2 M(P)
        let l = BigRational::from_integer(prim.length());
        let two_mlower = m_lower.lo.to_rational() * BigRational::from_integer(BigInt::from(2));
        Some(two_mlower <= l)
    } else {
        None
    };

    let criterion_2_1 = match &largest {
        Some(root) if has_root_gt_one => criterion_holds(&prim, root),
        _ => false,
    };

    let report = PisotReport {
        polynomial: prim,
        classification,
        largest_real_root: if has_root_gt_one { largest } else { None },
        criterion_2_1,
        root_counts: counts,
        mahler_bracket,
        dobrowolski_consistent,
    };
    Ok(report)
}

fn criterion_holds(p: &IntPolynomial, root: &AlgebraicReal) -> bool {
    // 2(zeta - 1) > L  <=>  zeta > L/2 + 1, decided exactly
    let threshold = BigRational::new(p.length(), BigInt::from(2)) + BigRational::one();
    root.cmp_rational(&threshold) == Ordering::Greater
}

/// The sufficient Pisot criterion: `holds` iff `2(zeta-1) > L(P)` for the
/// largest real root `zeta > 1`; when it holds, the independent exact root
/// count must certify Pisot — that cross-check is asserted here.
pub fn hot_criterion(p: &IntPolynomial) -> Result<(bool, bool)> {
    let report = classify_pisot_salem(p)?;
    let holds = report.criterion_2_1;
    let certified_pisot = report.classification == Classification::Pisot;
    if holds {
        assert!(
            certified_pisot,
            "criterion 2(zeta-1) > L holds but exact root counting disagrees for {p}"
        );
    }
    Ok((holds, certified_pisot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{family, FamilyKind};

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(v)
    }

    #[test]
    fn p24_is_pisot_with_criterion() {
        let r = classify_pisot_salem(&poly(&[-1, -4, 1])).unwrap();
        assert_eq!(r.classification, Classification::Pisot);
        assert_eq!(r.root_counts, (1, 0, 1));
        assert!(r.criterion_2_1); // 2(1+sqrt5) = 6.47 > 6
        let (holds, pisot) = hot_criterion(&poly(&[-1, -4, 1])).unwrap();
        assert!(holds && pisot);
    }

    #[test]
    fn golden_ratio_pisot_without_criterion() {
        // x^2-x-1: Pisot (phi) but 2(phi-1) = 1.236 < 3 = L
        let (holds, pisot) = hot_criterion(&poly(&[-1, -1, 1])).unwrap();
        assert!(!holds);
        assert!(pisot);
        // x^2-3x+1: roots (3+-sqrt5)/2, smaller ~ 0.38: Pisot
        let r = classify_pisot_salem(&poly(&[1, -3, 1])).unwrap();
        assert_eq!(r.classification, Classification::Pisot);
    }

    #[test]
    fn q_family_is_neither() {
        // 2x^2-6x-1: non-monic, real root > 3
        let r = classify_pisot_salem(&poly(&[-1, -6, 2])).unwrap();
        assert_eq!(r.classification, Classification::Neither);
        assert!(!r.criterion_2_1 || r.classification == Classification::Pisot);
    }

    #[test]
    fn no_large_root_not_applicable() {
        // x^2+x+1 has no real roots at all
        let r = classify_pisot_salem(&poly(&[1, 1, 1])).unwrap();
        assert_eq!(r.classification, Classification::NotApplicable);
        // circle roots force the Dobrowolski check; L = 3 >= 2*M = 2
        assert_eq!(r.dobrowolski_consistent, Some(true));
    }

    #[test]
    fn reducible_rejected_with_witness() {
        let p = poly(&[-1, 1]).mul(&poly(&[-3, 1]));
        match classify_pisot_salem(&p) {
            Err(Error::Reducible { .. }) => {}
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn salem_candidate_lehmer_quartic() {
        // x^4-x^3-x^2-x+1 is irreducible, monic, one real root > 1, two roots
        // on the circle: the Salem configuration, certified symbolically.
        let p = poly(&[1, -1, -1, -1, 1]);
        let r = classify_pisot_salem(&p).unwrap();
        assert_eq!(r.root_counts, (1, 2, 1));
        assert_eq!(r.classification, Classification::SalemCandidate);
        assert_eq!(r.dobrowolski_consistent, Some(true));
        assert!(!r.criterion_2_1); // Salem numbers never satisfy it
    }

    #[test]
    fn family_criterion_grid() {
        // m=3, b=10: root in (10, 11), 2(zeta-1) > 18 > 12 = L
        let (p, _) = family(FamilyKind::P, 3, 10).unwrap();
        let (holds, pisot) = hot_criterion(&p).unwrap();
        assert!(holds && pisot);
    }

    #[test]
    fn mahler_bracket_contains_measure() {
        // for x^2-4x-1: M = 2+sqrt5 = 4.236... and ||P||_2 = sqrt18 = 4.2426...
        let r = classify_pisot_salem(&poly(&[-1, -4, 1])).unwrap();
        let m = crate::exact::rational::rat(4236068, 1000000);
        assert!(r.mahler_bracket.lo.to_rational() <= m);
        assert!(m <= r.mahler_bracket.hi.to_rational());
    }
}
