//! Height-bound criteria and the genus-0 classifier for P(X) - Q(Y) = 0.
//!
//! All quantities are exact rationals. The three entry points mirror the
//! three levels of strength: `evaluate_theorem1` needs nothing beyond the
//! degrees and the unmatched critical weights, `evaluate_theorem2` refines
//! the count through the matched-pair matrix (and therefore needs both
//! polynomials to take distinct values at distinct critical points), and
//! `classify_theorem3` decides nonconstant-solution existence completely in
//! the genus-0 equal-degree case.

use num_traits::{Signed, ToPrimitive};

use crate::critical::{critical_profile, match_matrix, unmatched_weight, CriticalProfile, MatchMatrix};
use crate::error::{Error, Result};
use crate::funcfield::WitnessOutcome;
use crate::ratpoly::{poly_gcd, rat, rational_roots, Polynomial, Rat};

/// Validated input: two polynomials of degree >= 2 and the genus of the
/// ambient curve. Construction swaps the pair if needed so that
/// `deg p >= deg q`; `swapped` records whether that happened.
#[derive(Clone, Debug)]
pub struct AnalysisInput {
    pub p: Polynomial,
    pub q: Polynomial,
    pub genus: u32,
    pub swapped: bool,
}

impl AnalysisInput {
    pub fn new(p: Polynomial, q: Polynomial, genus: u32) -> Result<Self> {
        for (name, poly) in [("P", &p), ("Q", &q)] {
            match poly.degree() {
                Some(d) if d >= 2 => {}
                _ => {
                    return Err(Error::Nonlinear(format!(
                        "{name} must have degree >= 2, got {poly}"
                    )))
                }
            }
        }
        let swapped = p.deg() < q.deg();
        let (p, q) = if swapped { (q, p) } else { (p, q) };
        Ok(AnalysisInput { p, q, genus, swapped })
    }

    /// deg P (the larger degree after orientation).
    pub fn n(&self) -> usize {
        self.p.deg()
    }

    /// deg Q.
    pub fn m(&self) -> usize {
        self.q.deg()
    }
}

/// The exact criterion values. `s2` and `matrix` are absent when the
/// distinct-critical-values hypothesis fails for either polynomial.
#[derive(Clone, Debug)]
pub struct CriteriaValues {
    pub n: usize,
    pub m: usize,
    pub b0_sum: Rat,
    pub b1_sum: Rat,
    pub s0: Rat,
    pub s1: Rat,
    pub s2: Option<Rat>,
    pub matrix: Option<MatchMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Case {
    A,
    B,
    C,
    D,
    E,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::D => "D",
            Case::E => "E",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    ConstantsOnly,
    HeightBounded,
    NonconstantExists,
    Inconclusive,
}

/// Outcome of one criterion or of the combined analysis. `bounds` is the
/// pair (max h(f), max h(g)) in the oriented sense (f plugged into the
/// higher-degree polynomial); `cases` is populated by the classifier only.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub bounds: Option<(u64, u64)>,
    pub cases: Vec<Case>,
    pub witness: Option<WitnessOutcome>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn plain(kind: VerdictKind) -> Self {
        Verdict {
            kind,
            bounds: None,
            cases: Vec::new(),
            witness: None,
            notes: Vec::new(),
        }
    }
}

/// max{0, 2g - 2}: the threshold a criterion value must exceed to force
/// constant solutions.
pub fn threshold(genus: u32) -> Rat {
    let t = 2 * genus as i64 - 2;
    rat(t.max(0))
}

fn two_g_minus_2(genus: u32) -> Rat {
    rat(2 * genus as i64 - 2)
}

/// Floor of a nonnegative rational as u64.
fn floor_u64(x: &Rat) -> u64 {
    debug_assert!(!x.is_negative());
    x.floor().to_integer().to_u64().unwrap_or(u64::MAX)
}

/// Bound pair (h(f), h(g)) from a bound on h(f), using n*h(f) = m*h(g).
fn bounds_from_hf(hf: u64, n: usize, m: usize) -> (u64, u64) {
    (hf, hf * n as u64 / m as u64)
}

fn bounds_from_hg(hg: u64, n: usize, m: usize) -> (u64, u64) {
    (hg * m as u64 / n as u64, hg)
}

fn min_bounds(a: Option<(u64, u64)>, b: Option<(u64, u64)>) -> Option<(u64, u64)> {
    match (a, b) {
        (Some((f1, g1)), Some((f2, g2))) => Some((f1.min(f2), g1.min(g2))),
        (x, None) => x,
        (None, y) => y,
    }
}

/// First criterion pair: s0 from the P-critical points whose value avoids
/// every Q-critical value, s1 mirrored. Either exceeding max{0, 2g-2}
/// forces constant solutions; a positive value within the threshold bounds
/// heights. Independent of any matching hypothesis.
pub fn evaluate_theorem1(input: &AnalysisInput) -> Result<(CriteriaValues, Verdict)> {
    let prof_p = critical_profile(&input.p)?;
    let prof_q = critical_profile(&input.q)?;
    evaluate_theorem1_with(input, &prof_p, &prof_q)
}

pub(crate) fn evaluate_theorem1_with(
    input: &AnalysisInput,
    prof_p: &CriticalProfile,
    prof_q: &CriticalProfile,
) -> Result<(CriteriaValues, Verdict)> {
    let (n, m) = (input.n(), input.m());
    let b0_sum = unmatched_weight(prof_p, prof_q)?;
    let b1_sum = unmatched_weight(prof_q, prof_p)?;
    let s0 = &b0_sum - rat((m + n) as i64) / rat(m as i64);
    let s1 = &b1_sum - rat(2 * m as i64) / rat(n as i64);
    let values = CriteriaValues {
        n,
        m,
        b0_sum,
        b1_sum,
        s0: s0.clone(),
        s1: s1.clone(),
        s2: None,
        matrix: None,
    };
    let thr = threshold(input.genus);
    let verdict = if s0 > thr || s1 > thr {
        Verdict::plain(VerdictKind::ConstantsOnly)
    } else {
        let budget = two_g_minus_2(input.genus);
        let mut bounds = None;
        if s0.is_positive() {
            let hf = floor_u64(&(&budget / &s0));
            bounds = min_bounds(bounds, Some(bounds_from_hf(hf, n, m)));
        }
        if s1.is_positive() {
            let hg = floor_u64(&(&budget / &s1));
            bounds = min_bounds(bounds, Some(bounds_from_hg(hg, n, m)));
        }
        match bounds {
            Some(b) => Verdict {
                bounds: Some(b),
                ..Verdict::plain(VerdictKind::HeightBounded)
            },
            None => Verdict::plain(VerdictKind::Inconclusive),
        }
    };
    Ok((values, verdict))
}

/// Refined criterion s2: matched pairs where the P-side multiplicity
/// strictly exceeds the Q-side contribute their excess, unmatched P-critical
/// points contribute fully. Requires both polynomials to take distinct
/// values at distinct critical points.
pub fn evaluate_theorem2(input: &AnalysisInput) -> Result<(CriteriaValues, Verdict)> {
    let prof_p = critical_profile(&input.p)?;
    let prof_q = critical_profile(&input.q)?;
    evaluate_theorem2_with(input, &prof_p, &prof_q)
}

pub(crate) fn evaluate_theorem2_with(
    input: &AnalysisInput,
    prof_p: &CriticalProfile,
    prof_q: &CriticalProfile,
) -> Result<(CriteriaValues, Verdict)> {
    if !prof_p.hypothesis_i {
        return Err(Error::Theorem2Inapplicable(format!("{}", input.p)));
    }
    if !prof_q.hypothesis_i {
        return Err(Error::Theorem2Inapplicable(format!("{}", input.q)));
    }
    let (n, m) = (input.n(), input.m());
    let matrix = match_matrix(prof_p, prof_q)?;
    let ratio_nm = rat(n as i64) / rat(m as i64);
    let mut s2 = -(rat((m + n) as i64) / rat(m as i64));
    for (&(e, d), &count) in &matrix.counts {
        if e > d {
            s2 += rat(count as i64) * (rat(e as i64) - &ratio_nm * rat(d as i64));
        }
    }
    for class in &prof_p.classes {
        let unmatched = class.class_factor.deg() - matrix.matched_in_class(class.multiplicity);
        s2 += rat(class.multiplicity as i64) * rat(unmatched as i64);
    }

    let b0_sum = unmatched_weight(prof_p, prof_q)?;
    let b1_sum = unmatched_weight(prof_q, prof_p)?;
    let values = CriteriaValues {
        n,
        m,
        s0: &b0_sum - rat((m + n) as i64) / rat(m as i64),
        s1: &b1_sum - rat(2 * m as i64) / rat(n as i64),
        b0_sum,
        b1_sum,
        s2: Some(s2.clone()),
        matrix: Some(matrix),
    };
    let thr = threshold(input.genus);
    let verdict = if s2 > thr {
        Verdict::plain(VerdictKind::ConstantsOnly)
    } else if s2.is_positive() {
        let hf = floor_u64(&(&two_g_minus_2(input.genus) / &s2));
        Verdict {
            bounds: Some(bounds_from_hf(hf, n, m)),
            ..Verdict::plain(VerdictKind::HeightBounded)
        }
    } else {
        Verdict::plain(VerdictKind::Inconclusive)
    };
    Ok((values, verdict))
}

/// Existence certificate for a linear factor of P(X) - Q(Y): `min_poly`
/// is a nonconstant divisor of a^n - lc(Q)/lc(P) over Q, and every root a*
/// of it, with b* = b_slope * a* + b_intercept, satisfies
/// P(a* Y + b*) = Q(Y) identically.
#[derive(Clone, Debug)]
pub struct LinearFactorCertificate {
    pub min_poly: Polynomial,
    pub b_slope: Rat,
    pub b_intercept: Rat,
}

impl LinearFactorCertificate {
    /// A rational (a, b) with P(aY + b) = Q(Y), when `min_poly` has a
    /// rational root.
    pub fn rational_solution(&self) -> Result<Option<(Rat, Rat)>> {
        let roots = rational_roots(&self.min_poly)?;
        Ok(roots.first().map(|a| {
            let b = &self.b_slope * a + &self.b_intercept;
            (a.clone(), b)
        }))
    }
}

fn binomial(j: usize, k: usize) -> Rat {
    let mut b = rat(1);
    for i in 0..k {
        b = b * rat((j - i) as i64) / rat((i + 1) as i64);
    }
    b
}

/// Decides whether P(X) - Q(Y) has a linear factor over the algebraic
/// closure of Q, without extracting any algebraic number. The slope a must
/// satisfy a^n = lc(Q)/lc(P) and the intercept is an explicit linear
/// function of a; substituting both into the coefficient equations and
/// taking the gcd of all constraints with a^n - c leaves exactly the
/// admissible minimal polynomials of a.
pub fn detect_linear_factor(
    p: &Polynomial,
    q: &Polynomial,
) -> Result<Option<LinearFactorCertificate>> {
    let n = match (p.degree(), q.degree()) {
        (Some(np), Some(nq)) if np == nq && np >= 1 => np,
        _ => return Ok(None),
    };
    let c = q.leading() / p.leading();
    // modulus a^n - c
    let modulus = &Polynomial::monomial(n, rat(1)) - &Polynomial::constant(c.clone());
    // From the Y^(n-1) coefficient: b = u*a + v.
    let u = q.coeff(n - 1) / (&c * rat(n as i64) * p.leading());
    let v = -p.coeff(n - 1) / (rat(n as i64) * p.leading());
    let b = Polynomial::new(vec![v.clone(), u.clone()]);

    let mut g = modulus.clone();
    for k in 0..=n {
        // Coefficient of Y^k in P(aY + b) - Q(Y), as a polynomial in a.
        let mut e = Polynomial::constant(-q.coeff(k));
        let a_k = Polynomial::monomial(k, rat(1));
        for j in k..=n {
            let term = b.pow((j - k) as u32).scale(&(p.coeff(j) * binomial(j, k)));
            e = &e + &(&a_k * &term);
        }
        let (_, r) = e.divrem(&modulus)?;
        g = poly_gcd(&g, &r)?;
        if g.is_constant() {
            return Ok(None);
        }
    }
    Ok(Some(LinearFactorCertificate {
        min_poly: g,
        b_slope: u,
        b_intercept: v,
    }))
}

/// Total gcd degree between the full critical-value polynomials.
fn matched_value_degree(a: &CriticalProfile, b: &CriticalProfile) -> Result<usize> {
    let g = poly_gcd(&a.value_product(), &b.value_product())?;
    Ok(g.deg())
}

/// One profile concentrated in a single critical point of multiplicity
/// p1 >= 2, the other split as {p1 - 1, 1}, with the two heavy points
/// sharing their critical value.
fn case_b_oriented(single: &CriticalProfile, split: &CriticalProfile) -> Result<bool> {
    if single.distinct_root_count() != 1 || split.distinct_root_count() != 2 {
        return Ok(false);
    }
    let p1 = single.classes[0].multiplicity;
    if p1 < 2 || split.multiplicity_multiset() != vec![p1 - 1, 1] {
        return Ok(false);
    }
    let heavy = split
        .class_with_multiplicity(p1 - 1)
        .ok_or_else(|| Error::Internal("missing split class".into()))?;
    let g = poly_gcd(&single.classes[0].value_poly, &heavy.value_poly)?;
    Ok(g.deg() >= 1)
}

/// Complete decision of nonconstant-solution existence in the genus-0,
/// equal-degree case: solutions exist iff one of the five structural
/// conditions holds. Gated hard on its hypotheses.
pub fn classify_theorem3(input: &AnalysisInput) -> Result<Verdict> {
    let prof_p = critical_profile(&input.p)?;
    let prof_q = critical_profile(&input.q)?;
    classify_theorem3_with(input, &prof_p, &prof_q)
}

pub(crate) fn classify_theorem3_with(
    input: &AnalysisInput,
    prof_p: &CriticalProfile,
    prof_q: &CriticalProfile,
) -> Result<Verdict> {
    if input.genus != 0 {
        return Err(Error::Theorem3Gate(format!(
            "genus 0 (got genus {})",
            input.genus
        )));
    }
    if input.n() != input.m() {
        return Err(Error::Theorem3Gate(format!(
            "n = m (got n = {}, m = {})",
            input.n(),
            input.m()
        )));
    }
    if !prof_p.hypothesis_i {
        return Err(Error::Theorem3Gate(format!(
            "distinct critical values for {}",
            input.p
        )));
    }
    if !prof_q.hypothesis_i {
        return Err(Error::Theorem3Gate(format!(
            "distinct critical values for {}",
            input.q
        )));
    }

    let mut cases = Vec::new();
    let mut notes = Vec::new();

    if detect_linear_factor(&input.p, &input.q)?.is_some() {
        cases.push(Case::A);
    }

    if case_b_oriented(prof_p, prof_q)? || case_b_oriented(prof_q, prof_p)? {
        cases.push(Case::B);
    }

    let (lp, lq) = (prof_p.distinct_root_count(), prof_q.distinct_root_count());
    if lp == 2 && lq == 2 {
        let mp = prof_p.multiplicity_multiset();
        if mp == prof_q.multiplicity_multiset() && mp[1] == 1 {
            let p1 = mp[0];
            let matched = if p1 > 1 {
                let tp = &prof_p
                    .class_with_multiplicity(p1)
                    .ok_or_else(|| Error::Internal("missing top class".into()))?
                    .value_poly;
                let tq = &prof_q
                    .class_with_multiplicity(p1)
                    .ok_or_else(|| Error::Internal("missing top class".into()))?
                    .value_poly;
                poly_gcd(tp, tq)?.deg() >= 1
            } else {
                // all four critical points are simple: accept any shared value
                let hit = matched_value_degree(prof_p, prof_q)? >= 1;
                if hit {
                    notes.push(
                        "two simple critical points on each side; any shared critical value accepted"
                            .into(),
                    );
                }
                hit
            };
            if matched {
                cases.push(Case::C);
            }
        }
    }

    if lp == 3
        && lq == 3
        && prof_p.multiplicity_multiset() == vec![1, 1, 1]
        && prof_q.multiplicity_multiset() == vec![1, 1, 1]
        && matched_value_degree(prof_p, prof_q)? == 3
    {
        cases.push(Case::D);
    }

    if lp == 1
        && lq == 1
        && prof_p.classes[0].multiplicity == 1
        && prof_q.classes[0].multiplicity == 1
        && prof_p.classes[0].class_factor.deg() == 1
        && prof_q.classes[0].class_factor.deg() == 1
    {
        cases.push(Case::E);
    }

    let kind = if cases.is_empty() {
        VerdictKind::ConstantsOnly
    } else {
        VerdictKind::NonconstantExists
    };
    Ok(Verdict {
        kind,
        bounds: None,
        cases,
        witness: None,
        notes,
    })
}

/// Full aggregated analysis of one input.
#[derive(Clone, Debug)]
pub struct Report {
    pub input: AnalysisInput,
    pub prof_p: CriticalProfile,
    pub prof_q: CriticalProfile,
    pub theorem1: (CriteriaValues, Verdict),
    /// Absent (with the reason) when the distinct-critical-values
    /// hypothesis fails.
    pub theorem2: std::result::Result<(CriteriaValues, Verdict), String>,
    /// Absent (with the gate reason) outside the genus-0 equal-degree case.
    pub theorem3: std::result::Result<Verdict, String>,
    pub verdict: Verdict,
    /// Which criterion produced the combined verdict.
    pub verdict_source: String,
}

impl Report {
    /// Height-bound pair in the orientation the caller supplied, i.e.
    /// un-swapped if construction reversed the roles.
    pub fn bounds_for_original_orientation(&self) -> Option<(u64, u64)> {
        self.verdict.bounds.map(
            |(hf, hg)| {
                if self.input.swapped {
                    (hg, hf)
                } else {
                    (hf, hg)
                }
            },
        )
    }
}

/// Runs every applicable criterion and combines them into the strongest
/// verdict: an existence classification wins (with a verified witness
/// attached where one can be built over Q), then a constants-only
/// conclusion, then the tightest height bounds.
pub fn analyze(input: AnalysisInput) -> Result<Report> {
    let prof_p = critical_profile(&input.p)?;
    let prof_q = critical_profile(&input.q)?;

    let theorem1 = evaluate_theorem1_with(&input, &prof_p, &prof_q)?;
    let theorem2 = match evaluate_theorem2_with(&input, &prof_p, &prof_q) {
        Ok(t) => Ok(t),
        Err(Error::Theorem2Inapplicable(msg)) => Err(msg),
        Err(e) => return Err(e),
    };
    let theorem3 = match classify_theorem3_with(&input, &prof_p, &prof_q) {
        Ok(v) => Ok(v),
        Err(Error::Theorem3Gate(msg)) => Err(msg),
        Err(e) => return Err(e),
    };

    let (verdict, verdict_source) = combine(&input, &theorem1, &theorem2, &theorem3)?;
    Ok(Report {
        input,
        prof_p,
        prof_q,
        theorem1,
        theorem2,
        theorem3,
        verdict,
        verdict_source,
    })
}

fn combine(
    input: &AnalysisInput,
    theorem1: &(CriteriaValues, Verdict),
    theorem2: &std::result::Result<(CriteriaValues, Verdict), String>,
    theorem3: &std::result::Result<Verdict, String>,
) -> Result<(Verdict, String)> {
    if let Ok(v3) = theorem3 {
        if v3.kind == VerdictKind::NonconstantExists {
            let mut v = v3.clone();
            v.witness = build_witness(input, &v.cases)?;
            return Ok((v, "existence classification".into()));
        }
    }
    if theorem1.1.kind == VerdictKind::ConstantsOnly {
        return Ok((theorem1.1.clone(), "unmatched-weight criterion".into()));
    }
    if let Ok((_, v2)) = theorem2 {
        if v2.kind == VerdictKind::ConstantsOnly {
            return Ok((v2.clone(), "matched-excess criterion".into()));
        }
    }
    if let Ok(v3) = theorem3 {
        // all five conditions failed: constants only
        return Ok((v3.clone(), "existence classification".into()));
    }
    let mut bounds = theorem1.1.bounds;
    let mut source = "unmatched-weight criterion";
    if let Ok((_, v2)) = theorem2 {
        if let Some(b2) = v2.bounds {
            if bounds.map_or(true, |b1| b2.0 < b1.0) {
                source = "matched-excess criterion";
            }
            bounds = min_bounds(bounds, Some(b2));
        }
    }
    match bounds {
        Some(b) => Ok((
            Verdict {
                bounds: Some(b),
                ..Verdict::plain(VerdictKind::HeightBounded)
            },
            source.into(),
        )),
        None => Ok((Verdict::plain(VerdictKind::Inconclusive), "none conclusive".into())),
    }
}

fn build_witness(input: &AnalysisInput, cases: &[Case]) -> Result<Option<WitnessOutcome>> {
    use crate::funcfield::witness;
    if cases.contains(&Case::E) {
        return Ok(Some(witness(Case::E, &input.p, &input.q, None)?));
    }
    if cases.contains(&Case::A) {
        let cert = detect_linear_factor(&input.p, &input.q)?;
        return Ok(Some(witness(Case::A, &input.p, &input.q, cert)?));
    }
    Ok(None)
}
