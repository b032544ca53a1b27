//! Randomized algebraic invariants for the polynomial and function-field
//! kernels. Each property states an identity that must hold for every
//! input, independent of the curated fixtures in the acceptance suite.

use proptest::prelude::*;

use sepcurve::cli::{parse_polynomial, parse_rational_function};
use sepcurve::criteria::{analyze, AnalysisInput};
use sepcurve::funcfield::{pair_height, RationalFunction};
use sepcurve::ratpoly::{
    coprime_part, poly_gcd, pretty, rat, ratio, value_poly, yun_decompose, Polynomial,
};
use sepcurve::Rat;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant_monic(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rat(), 2..=max_deg + 1)
        .prop_map(Polynomial::new)
        .prop_filter("nonconstant", |p| !p.is_constant())
        .prop_map(|p| p.monic())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    /// gcd(a, b) is monic, divides both arguments, and any common factor
    /// planted by multiplication shows up in it.
    #[test]
    fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.divides_into(&g));
        prop_assert!(b.divides_into(&g));

        let g2 = poly_gcd(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert!(g2.divides_into(&c.monic()));
    }

    /// Squarefree decomposition reconstructs the monic input, and its
    /// factors are squarefree and pairwise coprime.
    #[test]
    fn yun_reconstructs_input(a in nonconstant_monic(6)) {
        let parts = yun_decompose(&a).unwrap();
        let mut product = Polynomial::one();
        for (mult, factor) in &parts {
            prop_assert!(factor.is_squarefree().unwrap());
            product = &product * &factor.pow(*mult);
        }
        prop_assert_eq!(product, a.monic());
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let g = poly_gcd(&parts[i].1, &parts[j].1).unwrap();
                prop_assert!(g.is_constant());
            }
        }
    }

    /// The part of u coprime to w divides u and shares no factor with w.
    #[test]
    fn coprime_part_is_coprime(u in nonzero_poly(5), w in nonzero_poly(5)) {
        let cp = coprime_part(&u, &w).unwrap();
        prop_assert!(u.divides_into(&cp));
        let g = poly_gcd(&cp, &w).unwrap();
        prop_assert!(g.is_constant());
    }

    /// The value polynomial of s under p vanishes at p(r) for every root
    /// r of s: plant a rational root and check.
    #[test]
    fn value_poly_hits_planted_root(
        r in -5i64..=5,
        extra in nonconstant_monic(3),
        p in nonconstant_monic(4),
    ) {
        let s = &extra * &Polynomial::new(vec![rat(-r), rat(1)]);
        let vp = value_poly(&s, &p).unwrap();
        prop_assert_eq!(vp.eval(&p.eval(&rat(r))), rat(0));
    }

    /// Printing and re-parsing a polynomial is the identity.
    #[test]
    fn polynomial_parse_round_trip(p in poly(6)) {
        let text = pretty(&p, "x");
        let back = parse_polynomial(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    /// Printing and re-parsing a rational function is the identity.
    #[test]
    fn rational_function_parse_round_trip(n in poly(4), d in nonzero_poly(4)) {
        let f = RationalFunction::new(n, d).unwrap();
        let back = parse_rational_function(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    /// Height is invariant under inversion; pairing with the constant 1
    /// recovers the plain height, and the projective pair height of (f, f)
    /// is zero.
    #[test]
    fn height_inversion_invariance(n in nonzero_poly(4), d in nonzero_poly(4)) {
        let f = RationalFunction::new(n, d).unwrap();
        if !f.is_zero() {
            prop_assert_eq!(f.height(), f.recip().unwrap().height());
            prop_assert_eq!(pair_height(&f, &f).unwrap(), 0);
        }
        let one = RationalFunction::constant(rat(1));
        prop_assert_eq!(pair_height(&f, &one).unwrap(), f.height());
    }

    /// Critical classes account for every root of the derivative: the
    /// multiplicity-weighted class degrees sum to deg(P) - 1, and every
    /// value polynomial matches its class degree.
    #[test]
    fn critical_classes_cover_derivative(p in nonconstant_monic(6)) {
        prop_assume!(p.deg() >= 2);
        let prof = sepcurve::critical::critical_profile(&p).unwrap();
        let covered: usize = prof
            .classes
            .iter()
            .map(|c| c.multiplicity as usize * c.class_factor.deg())
            .sum();
        prop_assert_eq!(covered, p.deg() - 1);
        for c in &prof.classes {
            prop_assert_eq!(c.value_poly.deg(), c.class_factor.deg());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, .. ProptestConfig::default() })]

    /// Swapping P and Q leaves the verdict kind unchanged and mirrors the
    /// height bounds reported in the caller's orientation.
    #[test]
    fn analyze_swap_coherence(
        p in nonconstant_monic(4),
        q in nonconstant_monic(4),
        genus in 0u32..=2,
    ) {
        prop_assume!(p.deg() >= 2 && q.deg() >= 2);
        let fwd = analyze(AnalysisInput::new(p.clone(), q.clone(), genus).unwrap()).unwrap();
        let rev = analyze(AnalysisInput::new(q, p, genus).unwrap()).unwrap();
        prop_assert_eq!(fwd.verdict.kind, rev.verdict.kind);
        let fb = fwd.bounds_for_original_orientation();
        let rb = rev.bounds_for_original_orientation().map(|(a, b)| (b, a));
        prop_assert_eq!(fb, rb);
    }
}
