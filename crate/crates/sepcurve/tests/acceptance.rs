//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Every check is exact; any
//! failure panics with the offending instance.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sepcurve::criteria::{
    analyze, classify_theorem3, detect_linear_factor, evaluate_theorem1, AnalysisInput, Case,
    VerdictKind,
};
use sepcurve::critical::{critical_profile, match_matrix, unmatched_weight};
use sepcurve::funcfield::{
    derivative_place_valuation, generate_test_solution, pair_height, support_places, valuation,
    verify_solution_identities, witness, RationalFunction, SolutionPair, WitnessOutcome,
};
use sepcurve::oracle::{certify_value_gap, numeric_cross_check, CrossCheckOutcome};
use sepcurve::ratpoly::{rat, ratio, Polynomial, Rat};

fn verdict_line(criterion: usize, name: &str, failures: &[String]) {
    println!(
        "criterion {criterion} ({name}): {}",
        if failures.is_empty() { "pass" } else { "fail" }
    );
    assert!(
        failures.is_empty(),
        "criterion {criterion} ({name}): {}",
        failures.join("; ")
    );
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn rand_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = rand_rat(rng);
        if !r.numer().is_zero() {
            return r;
        }
    }
}

fn rand_poly(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rat> = (0..=degree).map(|_| rand_rat(rng)).collect();
    if coeffs[degree].numer().is_zero() {
        coeffs[degree] = rat(1);
    }
    Polynomial::new(coeffs)
}

fn rand_mobius(rng: &mut ChaCha8Rng) -> RationalFunction {
    loop {
        let (a, b, c, d) = (
            rand_rat(rng),
            rand_rat(rng),
            rand_rat(rng),
            rand_rat(rng),
        );
        if (&a * &d - &b * &c).numer().is_zero() {
            continue;
        }
        let den = Polynomial::new(vec![d, c]);
        if den.is_zero() {
            continue;
        }
        let m = RationalFunction::new(Polynomial::new(vec![b, a]), den).expect("nonzero den");
        if !m.is_constant() {
            return m;
        }
    }
}

/// Deterministic corpus of distinct nonconstant solution pairs from the
/// composition family, shared by the identity and soundness criteria.
fn solution_corpus(count: usize) -> Vec<SolutionPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ebc_04fe);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let degree = rng.gen_range(1..=5usize);
        let a = rng.gen_range(1..=4u32);
        let b = rng.gen_range(1..=4u32);
        if a == b || degree * (a.min(b) as usize) < 2 {
            continue;
        }
        let r = rand_poly(&mut rng, degree);
        let m = rand_mobius(&mut rng);
        let sol = generate_test_solution(&r, a, b, &m).expect("family is always a solution");
        assert!(sol.distinct && !sol.f.is_constant() && !sol.g.is_constant());
        out.push(sol);
    }
    out
}

const CORPUS_SIZE: usize = 200;

/// Identity reports are the expensive part; compute them once and share
/// them between the criteria that consume the same corpus.
fn corpus_reports() -> &'static [(SolutionPair, sepcurve::funcfield::IdentityReport)] {
    use std::sync::OnceLock;
    static CELL: OnceLock<Vec<(SolutionPair, sepcurve::funcfield::IdentityReport)>> =
        OnceLock::new();
    CELL.get_or_init(|| {
        solution_corpus(CORPUS_SIZE)
            .into_iter()
            .map(|sol| {
                let rep = verify_solution_identities(&sol).expect("verifiable solution");
                (sol, rep)
            })
            .collect()
    })
}

#[test]
fn criterion_1_degree_height_identity() {
    let mut failures = Vec::new();
    for (sol, _) in corpus_reports() {
        let (n, m) = (sol.p.deg() as u64, sol.q.deg() as u64);
        if n * sol.f.height() != m * sol.g.height() {
            failures.push(format!(
                "n*h(f) != m*h(g) for P = {}, f = {}",
                sol.p, sol.f
            ));
        }
    }
    verdict_line(1, "n*h(f) = m*h(g) on 200 generated solutions", &failures);
}

#[test]
fn criterion_2_derivative_pair_inequality() {
    let mut failures = Vec::new();
    for (sol, rep) in corpus_reports() {
        match &rep.derivative_pair {
            Some(check) if check.ok => {}
            Some(check) => failures.push(format!(
                "inequality violated ({} > {}) for P = {}, f = {}",
                check.lhs, check.rhs, sol.p, sol.f
            )),
            None => failures.push(format!("pair skipped for P = {}", sol.p)),
        }
    }
    // pinned fixture: P = x^3, Q = y^2, f = t^2, g = t^3 gives 2 <= 3
    let sol = SolutionPair::new(
        Polynomial::from_ints(&[0, 0, 0, 1]),
        Polynomial::from_ints(&[0, 0, 1]),
        RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1])),
        RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 0, 1])),
    )
    .expect("t^6 on both sides");
    let rep = verify_solution_identities(&sol).expect("verifiable solution");
    let check = rep.derivative_pair.expect("distinct pair");
    if check.lhs != rat(2) || check.rhs != rat(3) {
        failures.push(format!(
            "cube/square fixture: expected 2 <= 3, got {} <= {}",
            check.lhs, check.rhs
        ));
    }
    verdict_line(2, "derivative-pair inequality on the corpus", &failures);
}

#[test]
fn criterion_3_pole_sum_identity() {
    let mut failures = Vec::new();
    for (sol, rep) in corpus_reports() {
        // the report orients the pair so that the larger degree comes first
        let n = sol.p.deg().max(sol.q.deg()) as i64;
        let hf = if rep.swapped { sol.g.height() } else { sol.f.height() };
        let expected = (n - 1) * hf as i64;
        if !rep.pole_sum_ok || rep.pole_sum_rhs != expected {
            failures.push(format!(
                "pole sum {} != {} for P = {}, f = {}",
                rep.pole_sum_lhs, expected, sol.p, sol.f
            ));
        }
    }
    verdict_line(3, "pole-sum identity equals (n-1)h(f)", &failures);
}

#[test]
fn criterion_4_sum_formulas_and_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0444_0444);
    let mut failures = Vec::new();
    let rand_function = |rng: &mut ChaCha8Rng| loop {
        let dn = rng.gen_range(0..=4usize);
        let num = rand_poly(rng, dn);
        let dd = rng.gen_range(0..=4usize);
        let den = rand_poly(rng, dd);
        if num.is_zero() || den.is_zero() {
            continue;
        }
        let f = RationalFunction::new(num, den).expect("nonzero den");
        if !f.is_constant() {
            return f;
        }
    };
    for _ in 0..200 {
        let eta = rand_function(&mut rng);
        let places = support_places(&[&eta]).expect("support");
        let total: i64 = places
            .iter()
            .map(|p| p.degree() as i64 * valuation(&eta, p).expect("nonzero eta"))
            .sum();
        if total != 0 {
            failures.push(format!("sum deg*v({eta}) = {total} != 0"));
        }
        let deta = eta.derivative();
        if deta.is_zero() {
            failures.push(format!("zero derivative for nonconstant {eta}"));
            continue;
        }
        let places = support_places(&[&eta, &deta]).expect("support");
        let total: i64 = places
            .iter()
            .map(|p| p.degree() as i64 * derivative_place_valuation(&eta, p).expect("nonzero"))
            .sum();
        if total != -2 {
            failures.push(format!("sum deg*v(d {eta}) = {total} != -2"));
        }
    }
    for _ in 0..100 {
        let f = rand_function(&mut rng);
        let g = rand_function(&mut rng);
        let eta = rand_function(&mut rng);
        let base = pair_height(&f, &g).expect("pair height");
        let scaled = pair_height(&(&eta * &f), &(&eta * &g)).expect("pair height");
        if base != scaled {
            failures.push(format!(
                "pair height changed under eta = {eta}: {base} -> {scaled}"
            ));
        }
    }
    verdict_line(4, "valuation sum formulas and scaling invariance", &failures);
}

#[test]
fn criterion_5_classification_fixtures() {
    let mut failures = Vec::new();
    let input = |p: &[i64], q: Vec<Rat>, genus: u32| {
        AnalysisInput::new(Polynomial::from_ints(p), Polynomial::new(q), genus)
            .expect("valid input")
    };
    let ints = |c: &[i64]| c.iter().map(|&x| rat(x)).collect::<Vec<_>>();

    // (x^2, y^2 + 1) -> {E} with an exactly verified witness
    let in_e = input(&[0, 0, 1], ints(&[1, 0, 1]), 0);
    let v = classify_theorem3(&in_e).expect("gates hold");
    if v.cases != vec![Case::E] {
        failures.push(format!("conic case: got {:?}", v.cases));
    }
    match witness(Case::E, &in_e.p, &in_e.q, None).expect("constructible") {
        WitnessOutcome::Pair(sol) => {
            if !verify_solution_identities(&sol).expect("verifiable").all_ok() {
                failures.push("conic witness fails identity checks".into());
            }
        }
        WitnessOutcome::ExistenceOnly(note) => {
            failures.push(format!("conic witness not constructed: {note}"))
        }
    }

    // (3x^4 - 4x^3, 3y^4 + 4y^3) -> at least {A, C}, witness f = -t, g = t
    let in_ac = input(&[0, 0, 0, -4, 3], ints(&[0, 0, 0, 4, 3]), 0);
    let v = classify_theorem3(&in_ac).expect("gates hold");
    if !v.cases.contains(&Case::A) || !v.cases.contains(&Case::C) {
        failures.push(format!("mirrored quartics: got {:?}", v.cases));
    }
    let cert = detect_linear_factor(&in_ac.p, &in_ac.q)
        .expect("detector runs")
        .expect("certificate exists");
    match witness(Case::A, &in_ac.p, &in_ac.q, Some(cert)).expect("constructible") {
        WitnessOutcome::Pair(sol) => {
            let minus_t = RationalFunction::from_poly(Polynomial::from_ints(&[0, -1]));
            if sol.f != minus_t || sol.g != RationalFunction::t() {
                failures.push(format!("expected f = -t, g = t; got f = {}, g = {}", sol.f, sol.g));
            }
        }
        WitnessOutcome::ExistenceOnly(note) => failures.push(format!("no pair: {note}")),
    }

    // concentrated/split pair: P' = 3x^2, Q' ~ (y-1)(y+1), heavy values match -> {B}
    let v = classify_theorem3(&input(&[0, 0, 0, 1], ints(&[2, -3, 0, 1]), 0)).expect("gates hold");
    if v.cases != vec![Case::B] {
        failures.push(format!("concentrated/split cubics: got {:?}", v.cases));
    }

    // matching cubic critical-value sets without affine equivalence -> {D}
    let q_d = vec![ratio(-7, 2), rat(1), rat(18), rat(0), rat(-27)];
    let v = classify_theorem3(&input(&[0, 1, -3, 0, 1], q_d, 0)).expect("gates hold");
    if v.cases != vec![Case::D] {
        failures.push(format!("cubic-value quartics: got {:?}", v.cases));
    }

    // (x^5 - 5x, y^5 - 5y + 1) -> only constants
    let v = classify_theorem3(&input(&[0, -5, 0, 0, 0, 1], ints(&[1, -5, 0, 0, 0, 1]), 0))
        .expect("gates hold");
    if v.kind != VerdictKind::ConstantsOnly {
        failures.push(format!("shifted quintics: got {:?}", v.kind));
    }

    // (x^5 - 5x, y^2) at genus 0 -> only constants via s0 = 1/2
    let report = analyze(input(&[0, -5, 0, 0, 0, 1], ints(&[0, 0, 1]), 0)).expect("analyzable");
    let (vals, _) = &report.theorem1;
    if report.verdict.kind != VerdictKind::ConstantsOnly || vals.s0 != ratio(1, 2) {
        failures.push(format!(
            "quintic/square: got {:?} with s0 = {}",
            report.verdict.kind, vals.s0
        ));
    }

    // (x^5, y^5 - 5y) -> only constants via s2 = 2
    let report = analyze(input(&[0, 0, 0, 0, 0, 1], ints(&[0, -5, 0, 0, 0, 1]), 0))
        .expect("analyzable");
    let s2 = report
        .theorem2
        .as_ref()
        .ok()
        .and_then(|(vals, _)| vals.s2.clone());
    if report.verdict.kind != VerdictKind::ConstantsOnly || s2 != Some(rat(2)) {
        failures.push(format!(
            "pure quintic: got {:?} with s2 = {s2:?}",
            report.verdict.kind
        ));
    }

    verdict_line(5, "curated classification fixtures", &failures);
}

#[test]
fn criterion_6_no_false_constants_only() {
    let mut failures = Vec::new();
    for (sol, _) in corpus_reports() {
        let input = AnalysisInput::new(sol.p.clone(), sol.q.clone(), 0).expect("valid degrees");
        let report = analyze(input).expect("analyzable");
        if report.verdict.kind == VerdictKind::ConstantsOnly {
            failures.push(format!(
                "ConstantsOnly despite solution f = {}, g = {} for P = {}, Q = {}",
                sol.f, sol.g, sol.p, sol.q
            ));
        }
    }
    verdict_line(6, "no ConstantsOnly verdict on solvable instances", &failures);
}

#[test]
fn criterion_7_exact_vs_numeric_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x07ac_1e00);
    let mut failures = Vec::new();
    let gap = Rat::new(1.into(), BigInt::from(10).pow(6));
    let tolerance = Rat::new(1.into(), BigInt::from(10).pow(20));
    let mut accepted = 0usize;
    while accepted < 100 {
        let dp = rng.gen_range(2..=8usize);
        let p = rand_poly(&mut rng, dp);
        let dq = rng.gen_range(2..=8usize);
        let q = rand_poly(&mut rng, dq);
        let (prof_p, prof_q) = match (critical_profile(&p), critical_profile(&q)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        if !prof_p.hypothesis_i || !prof_q.hypothesis_i {
            continue;
        }
        if !certify_value_gap(&p, &q, &gap).unwrap_or(false) {
            continue;
        }
        accepted += 1;
        match numeric_cross_check(&p, &q, &tolerance).expect("cross-check runs") {
            CrossCheckOutcome::Ambiguous(detail) => failures.push(format!(
                "ambiguous on gap-certified pair ({p}, {q}): {detail}"
            )),
            CrossCheckOutcome::Counts(c) => {
                let exact = match_matrix(&prof_p, &prof_q).expect("hypothesis holds");
                let b0 = unmatched_weight(&prof_p, &prof_q).expect("weights");
                let b1 = unmatched_weight(&prof_q, &prof_p).expect("weights");
                if c.counts != exact.counts || c.b0_sum != b0 || c.b1_sum != b1 {
                    failures.push(format!("numeric disagrees with exact on ({p}, {q})"));
                }
            }
        }
    }
    verdict_line(7, "numeric oracle agrees on 100 gap-certified pairs", &failures);
}

#[test]
fn criterion_8_height_bound_reporting() {
    let mut failures = Vec::new();
    let input = AnalysisInput::new(
        Polynomial::from_ints(&[0, -5, 0, 0, 0, 1]),
        Polynomial::from_ints(&[0, 0, 1]),
        2,
    )
    .expect("valid input");
    let (vals, verdict) = evaluate_theorem1(&input).expect("evaluates");
    if verdict.kind != VerdictKind::HeightBounded || verdict.bounds != Some((4, 10)) {
        failures.push(format!(
            "expected HeightBounded with (4, 10), got {:?} with {:?}",
            verdict.kind, verdict.bounds
        ));
    }
    if vals.s0.to_string() != "1/2" {
        failures.push(format!("expected s0 = 1/2, got {}", vals.s0));
    }
    verdict_line(8, "height bounds at genus 2", &failures);
}

#[test]
fn criterion_9_linear_factor_detector() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x09de_7ec7);
    let mut failures = Vec::new();
    for trial in 0..50 {
        let dp = rng.gen_range(2..=8usize);
        let p = rand_poly(&mut rng, dp);
        let a = rand_nonzero_rat(&mut rng);
        let b = rand_rat(&mut rng);
        let q = p.compose(&Polynomial::new(vec![b.clone(), a.clone()]));

        // planted positive: the slope a must be a root of the certificate
        match detect_linear_factor(&p, &q).expect("detector runs") {
            Some(cert) => {
                if !cert.min_poly.eval(&a).numer().is_zero() {
                    failures.push(format!(
                        "trial {trial}: planted slope {a} not among certificate roots"
                    ));
                }
            }
            None => failures.push(format!(
                "trial {trial}: missed planted factor for P = {p}, a = {a}, b = {b}"
            )),
        }

        // perturbed negative: bump one non-leading coefficient
        let idx = rng.gen_range(0..q.deg());
        let mut coeffs = q.coeffs().to_vec();
        coeffs[idx] += rand_nonzero_rat(&mut rng);
        let q_bumped = Polynomial::new(coeffs);
        if detect_linear_factor(&p, &q_bumped)
            .expect("detector runs")
            .is_some()
        {
            failures.push(format!(
                "trial {trial}: perturbed instance still reported a factor (P = {p})"
            ));
        }
    }
    verdict_line(9, "linear-factor detector on planted instances", &failures);
}
