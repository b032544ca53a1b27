//! Critical structure of a polynomial over Q.
//!
//! The distinct roots of P' are never constructed individually: they are
//! carried as the squarefree class factors of the Yun decomposition of P',
//! grouped by multiplicity, and their critical values P(alpha) are carried as
//! monic resultant polynomials in z. All of the matched/unmatched set
//! bookkeeping then reduces to degrees of gcds and coprime parts over Q.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ratpoly::{coprime_part, poly_gcd, rat, value_poly, yun_decompose, Polynomial, Rat};

/// One multiplicity class of P': the critical points of multiplicity
/// `multiplicity` in P' are exactly the roots of `class_factor`, and their
/// critical values are the roots of `value_poly` (same degree, monic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalClass {
    pub multiplicity: u32,
    pub class_factor: Polynomial,
    pub value_poly: Polynomial,
}

/// Full critical structure of a polynomial of degree `source_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalProfile {
    pub source_degree: usize,
    pub classes: Vec<CriticalClass>,
    /// True iff the source polynomial takes distinct values at distinct
    /// roots of its derivative, i.e. the product of the value polynomials
    /// is squarefree.
    pub hypothesis_i: bool,
}

impl CriticalProfile {
    /// Number of distinct critical points.
    pub fn distinct_root_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_factor.deg()).sum()
    }

    /// Multiplicities of the critical points, one entry per distinct root,
    /// sorted non-increasing.
    pub fn multiplicity_multiset(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for c in &self.classes {
            v.extend(std::iter::repeat(c.multiplicity).take(c.class_factor.deg()));
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Product of all critical-value polynomials (monic, degree = number of
    /// distinct critical points counted per class root).
    pub fn value_product(&self) -> Polynomial {
        self.classes
            .iter()
            .fold(Polynomial::one(), |acc, c| &acc * &c.value_poly)
    }

    pub fn class_with_multiplicity(&self, e: u32) -> Option<&CriticalClass> {
        self.classes.iter().find(|c| c.multiplicity == e)
    }
}

/// Extract the critical structure of `p`: differentiate, Yun-decompose the
/// derivative, and attach each class's critical-value polynomial.
pub fn critical_profile(p: &Polynomial) -> Result<CriticalProfile> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::Nonlinear(format!("{p}"))),
    };
    let dp = p.derivative();
    let classes: Vec<CriticalClass> = yun_decompose(&dp)?
        .into_iter()
        .map(|(e, s)| -> Result<CriticalClass> {
            let t = value_poly(&s, p)?;
            debug_assert_eq!(t.deg(), s.deg());
            Ok(CriticalClass {
                multiplicity: e,
                class_factor: s,
                value_poly: t,
            })
        })
        .collect::<Result<_>>()?;
    let product = classes
        .iter()
        .fold(Polynomial::one(), |acc, c| &acc * &c.value_poly);
    let hypothesis_i = product.is_squarefree()?;
    Ok(CriticalProfile {
        source_degree: n,
        classes,
        hypothesis_i,
    })
}

/// True iff the profile's source polynomial is injective on the roots of its
/// derivative.
pub fn check_hypothesis_i(profile: &CriticalProfile) -> bool {
    profile.hypothesis_i
}

/// Counts of matched critical-value pairs, keyed by the multiplicity pair
/// `(e, d)`: `counts[(e, d)]` is the number of pairs (alpha, beta) with
/// alpha a P-critical point of multiplicity e, beta a Q-critical point of
/// multiplicity d, and equal critical values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchMatrix {
    pub counts: BTreeMap<(u32, u32), usize>,
    pub l0: usize,
}

impl MatchMatrix {
    pub fn count(&self, e: u32, d: u32) -> usize {
        self.counts.get(&(e, d)).copied().unwrap_or(0)
    }

    /// Total matched pairs with P-multiplicity `e`.
    pub fn matched_in_class(&self, e: u32) -> usize {
        self.counts
            .iter()
            .filter(|((pe, _), _)| *pe == e)
            .map(|(_, n)| n)
            .sum()
    }
}

/// Matched-pair counts per multiplicity pair. Under Hypothesis I each
/// critical value of P matches at most one critical value of Q, so the
/// per-class gcd degrees count pairs exactly; without it the matrix is
/// refused (callers needing only the unmatched sums use
/// [`unmatched_weight`]).
pub fn match_matrix(prof_p: &CriticalProfile, prof_q: &CriticalProfile) -> Result<MatchMatrix> {
    if !prof_p.hypothesis_i {
        return Err(Error::HypothesisI("first profile violates it".into()));
    }
    if !prof_q.hypothesis_i {
        return Err(Error::HypothesisI("second profile violates it".into()));
    }
    let mut counts = BTreeMap::new();
    let mut l0 = 0;
    for cp in &prof_p.classes {
        for cq in &prof_q.classes {
            let g = poly_gcd(&cp.value_poly, &cq.value_poly)?;
            if let Some(d) = g.degree() {
                if d >= 1 {
                    counts.insert((cp.multiplicity, cq.multiplicity), d);
                    l0 += d;
                }
            }
        }
    }
    Ok(MatchMatrix { counts, l0 })
}

/// Sum of multiplicities of the critical points of P whose critical value
/// avoids every critical value of Q (swap the arguments for the other
/// orientation's sum). Works without Hypothesis I.
pub fn unmatched_weight(prof_p: &CriticalProfile, prof_q: &CriticalProfile) -> Result<Rat> {
    let w = prof_q.value_product().squarefree_part()?;
    let mut total = Rat::from_integer(0.into());
    for cp in &prof_p.classes {
        let kept = coprime_part(&cp.value_poly, &w)?;
        total += rat(cp.multiplicity as i64) * rat(kept.deg() as i64);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::Polynomial as P;

    fn poly(c: &[i64]) -> P {
        P::from_ints(c)
    }

    #[test]
    fn profile_of_3x4_minus_4x3() {
        // P' = 12x^2(x-1): classes (2, x) with value z (P(0)=0) and
        // (1, x-1) with value z+1 (P(1)=-1)
        let prof = critical_profile(&poly(&[0, 0, 0, -4, 3])).unwrap();
        assert_eq!(prof.source_degree, 4);
        assert_eq!(prof.classes.len(), 2);
        let c1 = prof.class_with_multiplicity(1).unwrap();
        assert_eq!(c1.class_factor, poly(&[-1, 1]));
        assert_eq!(c1.value_poly, poly(&[1, 1]));
        let c2 = prof.class_with_multiplicity(2).unwrap();
        assert_eq!(c2.class_factor, poly(&[0, 1]));
        assert_eq!(c2.value_poly, poly(&[0, 1]));
        assert!(prof.hypothesis_i);
    }

    #[test]
    fn profile_of_x5_minus_5x() {
        // P' = 5(x^4 - 1), values +-4, +-4i pairwise distinct
        let prof = critical_profile(&poly(&[0, -5, 0, 0, 0, 1])).unwrap();
        assert_eq!(prof.classes.len(), 1);
        assert_eq!(prof.classes[0].multiplicity, 1);
        assert_eq!(prof.classes[0].class_factor, poly(&[-1, 0, 0, 0, 1]));
        assert_eq!(prof.classes[0].value_poly, poly(&[-256, 0, 0, 0, 1]));
        assert!(prof.hypothesis_i);
    }

    #[test]
    fn profile_of_cube() {
        let prof = critical_profile(&poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(prof.classes.len(), 1);
        assert_eq!(prof.classes[0].multiplicity, 2);
        assert_eq!(prof.classes[0].class_factor, poly(&[0, 1]));
        assert_eq!(prof.classes[0].value_poly, poly(&[0, 1]));
        assert!(prof.hypothesis_i);
    }

    #[test]
    fn rejects_linear() {
        assert!(critical_profile(&poly(&[1, 2])).is_err());
    }

    #[test]
    fn hypothesis_i_examples() {
        // x^3 - 3x: critical values -+2 at +-1, distinct
        assert!(critical_profile(&poly(&[0, -3, 0, 1])).unwrap().hypothesis_i);
        // x^4 - 2x^2: P(1) = P(-1) = -1, double root in the value polynomial
        assert!(!critical_profile(&poly(&[0, 0, -2, 0, 1])).unwrap().hypothesis_i);
        // x^2: one critical point
        assert!(critical_profile(&poly(&[0, 0, 1])).unwrap().hypothesis_i);
    }

    #[test]
    fn match_matrix_mirrored_quartics() {
        // P(0)=Q(0)=0 for the double classes, P(1)=Q(-1)=-1 for the simple ones
        let p = critical_profile(&poly(&[0, 0, 0, -4, 3])).unwrap();
        let q = critical_profile(&poly(&[0, 0, 0, 4, 3])).unwrap();
        let m = match_matrix(&p, &q).unwrap();
        assert_eq!(m.count(2, 2), 1);
        assert_eq!(m.count(1, 1), 1);
        assert_eq!(m.l0, 2);
    }

    #[test]
    fn match_matrix_disjoint_values() {
        let p = critical_profile(&poly(&[0, 0, 0, 0, 0, 1])).unwrap();
        let q = critical_profile(&poly(&[0, -5, 0, 0, 0, 1])).unwrap();
        let m = match_matrix(&p, &q).unwrap();
        assert!(m.counts.is_empty());
        assert_eq!(m.l0, 0);
    }

    #[test]
    fn match_matrix_self_is_diagonal() {
        let p = critical_profile(&poly(&[0, -5, 0, 0, 0, 1])).unwrap();
        let m = match_matrix(&p, &p).unwrap();
        assert_eq!(m.count(1, 1), 4);
        assert_eq!(m.l0, p.distinct_root_count());
    }

    #[test]
    fn match_matrix_requires_hypothesis_i() {
        let bad = critical_profile(&poly(&[0, 0, -2, 0, 1])).unwrap();
        let good = critical_profile(&poly(&[0, 0, 1])).unwrap();
        assert!(match_matrix(&bad, &good).is_err());
    }

    #[test]
    fn unmatched_weight_examples() {
        let p5 = critical_profile(&poly(&[0, -5, 0, 0, 0, 1])).unwrap();
        let sq = critical_profile(&poly(&[0, 0, 1])).unwrap();
        // all four P-critical values differ from 0
        assert_eq!(unmatched_weight(&p5, &sq).unwrap(), rat(4));
        // x^3 vs y^2: the single class value 0 is matched
        let cube = critical_profile(&poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(unmatched_weight(&cube, &sq).unwrap(), rat(0));
        // P = Q: everything matched
        assert_eq!(unmatched_weight(&p5, &p5).unwrap(), rat(0));
    }

    #[test]
    fn degree_bookkeeping() {
        for coeffs in [
            vec![0, 0, 0, -4, 3],
            vec![0, -5, 0, 0, 0, 1],
            vec![3, 1, -2, 0, 0, 7, 2],
        ] {
            let p = poly(&coeffs);
            let prof = critical_profile(&p).unwrap();
            let total: usize = prof
                .classes
                .iter()
                .map(|c| c.multiplicity as usize * c.class_factor.deg())
                .sum();
            assert_eq!(total, p.deg() - 1);
        }
    }
}
