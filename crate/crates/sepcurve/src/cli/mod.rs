//! Command-line front end: expression/JSON input, exact JSON reports.
//!
//! Exit codes: 0 success, 2 malformed input, 3 hypothesis gate (a criterion
//! was asked for outside its preconditions), 4 internal invariant violation.

pub mod parse;

pub use parse::{parse_polynomial, parse_rat_string, parse_rational_function};

use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser as ClapParser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{
    analyze, classify_theorem3, detect_linear_factor, AnalysisInput, Case, Report, Verdict,
    VerdictKind,
};
use crate::critical::{critical_profile, match_matrix, unmatched_weight, CriticalProfile};
use crate::error::{Error, Result};
use crate::funcfield::{
    verify_solution_identities, witness, IdentityReport, SolutionPair,
    WitnessOutcome,
};
use crate::oracle::{numeric_cross_check, CrossCheckOutcome};
use crate::ratpoly::{pretty, Polynomial, Rat};

/// Formats a rational as exact text, never floating point.
fn rs(r: &Rat) -> String {
    r.to_string()
}

fn poly_coeff_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rs).collect()
}

// ---------------------------------------------------------------------------
// input documents

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Text(String),
    Coeffs(Vec<String>),
}

impl PolyInput {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        match self {
            PolyInput::Text(t) => parse_polynomial(t),
            PolyInput::Coeffs(cs) => {
                let coeffs = cs
                    .iter()
                    .map(|s| parse_rat_string(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Polynomial::new(coeffs))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(rename = "P")]
    pub p: PolyInput,
    #[serde(rename = "Q")]
    pub q: PolyInput,
    #[serde(default)]
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, String>,
}

// ---------------------------------------------------------------------------
// report documents

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub multiplicity: u32,
    /// ascending exact coefficients of the squarefree class factor
    pub class_factor: Vec<String>,
    /// ascending exact coefficients of the critical-value polynomial
    pub value_poly: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchDoc {
    pub p_multiplicity: u32,
    pub q_multiplicity: u32,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputEcho,
    pub n: usize,
    pub m: usize,
    pub swapped: bool,
    pub profile_p: Vec<ClassDoc>,
    pub profile_q: Vec<ClassDoc>,
    pub hypothesis_i_p: bool,
    pub hypothesis_i_q: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub match_matrix: Option<Vec<MatchDoc>>,
    pub b0_sum: String,
    pub b1_sum: String,
    pub s0: String,
    pub s1: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2: Option<String>,
    pub theorem1: VerdictDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<VerdictDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem3: Option<VerdictDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem3_error: Option<String>,
    pub verdict: VerdictDoc,
    pub verdict_source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub timing_ms: u64,
}

fn class_docs(prof: &CriticalProfile) -> Vec<ClassDoc> {
    prof.classes
        .iter()
        .map(|c| ClassDoc {
            multiplicity: c.multiplicity,
            class_factor: poly_coeff_strings(&c.class_factor),
            value_poly: poly_coeff_strings(&c.value_poly),
        })
        .collect()
}

fn verdict_doc(v: &Verdict) -> VerdictDoc {
    VerdictDoc {
        kind: match v.kind {
            VerdictKind::ConstantsOnly => "ConstantsOnly",
            VerdictKind::HeightBounded => "HeightBounded",
            VerdictKind::NonconstantExists => "NonconstantExists",
            VerdictKind::Inconclusive => "Inconclusive",
        }
        .to_string(),
        bounds: v.bounds.map(|(f, g)| [f, g]),
        cases: v.cases.iter().map(|c| c.to_string()).collect(),
        notes: v.notes.clone(),
    }
}

fn witness_doc(w: &WitnessOutcome) -> WitnessDoc {
    match w {
        WitnessOutcome::Pair(sol) => WitnessDoc {
            kind: "pair".into(),
            f: Some(sol.f.to_string()),
            g: Some(sol.g.to_string()),
            note: None,
        },
        WitnessOutcome::ExistenceOnly(note) => WitnessDoc {
            kind: "existence".into(),
            f: None,
            g: None,
            note: Some(note.clone()),
        },
    }
}

/// Builds the machine report from an analysis. `echo` preserves the exact
/// user-facing input text.
pub fn report_document(report: &Report, echo: InputEcho, timing_ms: u64) -> ReportDocument {
    let (vals1, v1) = &report.theorem1;
    let (s2, matrix) = match &report.theorem2 {
        Ok((vals2, _)) => (
            vals2.s2.as_ref().map(rs),
            vals2.matrix.as_ref().map(|m| {
                m.counts
                    .iter()
                    .map(|(&(e, d), &count)| MatchDoc {
                        p_multiplicity: e,
                        q_multiplicity: d,
                        count,
                    })
                    .collect::<Vec<_>>()
            }),
        ),
        Err(_) => (None, None),
    };
    ReportDocument {
        input: echo,
        n: report.input.n(),
        m: report.input.m(),
        swapped: report.input.swapped,
        profile_p: class_docs(&report.prof_p),
        profile_q: class_docs(&report.prof_q),
        hypothesis_i_p: report.prof_p.hypothesis_i,
        hypothesis_i_q: report.prof_q.hypothesis_i,
        match_matrix: matrix,
        b0_sum: rs(&vals1.b0_sum),
        b1_sum: rs(&vals1.b1_sum),
        s0: rs(&vals1.s0),
        s1: rs(&vals1.s1),
        s2,
        theorem1: verdict_doc(v1),
        theorem2: report.theorem2.as_ref().ok().map(|(_, v)| verdict_doc(v)),
        theorem2_error: report.theorem2.as_ref().err().cloned(),
        theorem3: report.theorem3.as_ref().ok().map(verdict_doc),
        theorem3_error: report.theorem3.as_ref().err().cloned(),
        verdict: verdict_doc(&report.verdict),
        verdict_source: report.verdict_source.clone(),
        witness: report.verdict.witness.as_ref().map(witness_doc),
        timing_ms,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDoc {
    pub n: usize,
    pub m: usize,
    pub swapped: bool,
    pub height_f: u64,
    pub height_g: u64,
    pub degree_relation_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_pair_lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_pair_rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_pair_ok: Option<bool>,
    pub pole_sum_lhs: i64,
    pub pole_sum_rhs: i64,
    pub pole_sum_ok: bool,
    pub local_checks_passed: usize,
    pub local_checks_failed: usize,
    pub local_checks_skipped: usize,
    pub scaling_ok: bool,
    pub distinct: bool,
    pub all_ok: bool,
}

fn identity_doc(rep: &IdentityReport) -> IdentityDoc {
    IdentityDoc {
        n: rep.n,
        m: rep.m,
        swapped: rep.swapped,
        height_f: rep.height_f,
        height_g: rep.height_g,
        degree_relation_ok: rep.degree_relation_ok,
        derivative_pair_lhs: rep.derivative_pair.as_ref().map(|c| rs(&c.lhs)),
        derivative_pair_rhs: rep.derivative_pair.as_ref().map(|c| rs(&c.rhs)),
        derivative_pair_ok: rep.derivative_pair.as_ref().map(|c| c.ok),
        pole_sum_lhs: rep.pole_sum_lhs,
        pole_sum_rhs: rep.pole_sum_rhs,
        pole_sum_ok: rep.pole_sum_ok,
        local_checks_passed: rep.local_checks.passed,
        local_checks_failed: rep.local_checks.failed,
        local_checks_skipped: rep.local_checks.skipped,
        scaling_ok: rep.scaling_ok,
        distinct: rep.distinct,
        all_ok: rep.all_ok(),
    }
}

// ---------------------------------------------------------------------------
// argument handling

#[derive(ClapParser, Debug)]
#[command(name = "sepcurve", about = "Exact analyzer for curves P(X) - Q(Y) = 0")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Full criteria report for one input
    Analyze(PairArgs),
    /// Existence classification only (genus 0, equal degrees)
    Classify(PairArgs),
    /// Verify the height identities on an explicit solution (f, g)
    Verify(VerifyArgs),
    /// Construct and verify a witness for a detected case
    Witness(PairArgs),
    /// Batch analysis over a JSON list of inputs
    Corpus(CorpusArgs),
    /// Diff the exact critical-value matching against the numeric shadow
    OracleCheck(PairArgs),
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// Genus of the ambient curve
    #[arg(long)]
    genus: Option<u32>,
    /// JSON input document instead of inline expressions
    #[arg(long)]
    input: Option<String>,
    /// Polynomial in X, e.g. "x^5 - 5*x"
    p: Option<String>,
    /// Polynomial in Y, e.g. "y^2"
    q: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    genus: Option<u32>,
    #[arg(long)]
    input: Option<String>,
    p: Option<String>,
    q: Option<String>,
    /// Rational function of t, e.g. "(t^2+1)/(2*t)"
    f: Option<String>,
    /// Rational function of t
    g: Option<String>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long)]
    json: bool,
    /// JSON file holding an array of input documents ("-" for stdin)
    #[arg(long)]
    input: String,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::Nonlinear(_)
        | Error::IdentityPrecondition(_) => 2,
        Error::HypothesisI(_) | Error::Theorem2Inapplicable(_) | Error::Theorem3Gate(_) => 3,
        Error::NoConvergence { .. } | Error::Internal(_) => 4,
    }
}

fn read_input_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
    }
}

fn parse_document(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        position: 0,
        message: format!("bad input document: {e}"),
    })
}

struct LoadedPair {
    p: Polynomial,
    q: Polynomial,
    genus: u32,
    echo: InputEcho,
    f: Option<String>,
    g: Option<String>,
}

fn load_pair(
    input: &Option<String>,
    p: &Option<String>,
    q: &Option<String>,
    genus_flag: Option<u32>,
) -> Result<LoadedPair> {
    if let Some(path) = input {
        let doc = parse_document(&read_input_text(path)?)?;
        let genus = genus_flag.unwrap_or(doc.genus);
        let p_poly = doc.p.to_polynomial()?;
        let q_poly = doc.q.to_polynomial()?;
        let echo = InputEcho {
            p: pretty(&p_poly, "x"),
            q: pretty(&q_poly, "y"),
            genus,
        };
        Ok(LoadedPair {
            p: p_poly,
            q: q_poly,
            genus,
            echo,
            f: doc.f,
            g: doc.g,
        })
    } else {
        let (pt, qt) = match (p, q) {
            (Some(pt), Some(qt)) => (pt, qt),
            _ => {
                return Err(Error::InvalidArgument(
                    "provide --input FILE or inline P and Q expressions".into(),
                ))
            }
        };
        let genus = genus_flag.unwrap_or(0);
        Ok(LoadedPair {
            p: parse_polynomial(pt)?,
            q: parse_polynomial(qt)?,
            genus,
            echo: InputEcho {
                p: pt.clone(),
                q: qt.clone(),
                genus,
            },
            f: None,
            g: None,
        })
    }
}

// ---------------------------------------------------------------------------
// subcommand bodies

fn print_human_report(doc: &ReportDocument) {
    println!("P = {}, Q = {} (genus {})", doc.input.p, doc.input.q, doc.input.genus);
    println!(
        "n = {}, m = {}{}",
        doc.n,
        doc.m,
        if doc.swapped { " (inputs swapped to put the larger degree first)" } else { "" }
    );
    print!("s0 = {}, s1 = {}", doc.s0, doc.s1);
    match &doc.s2 {
        Some(s2) => println!(", s2 = {s2}"),
        None => println!(", s2 unavailable ({})", doc.theorem2_error.as_deref().unwrap_or("-")),
    }
    if let Some(v3) = &doc.theorem3 {
        if !v3.cases.is_empty() {
            println!("existence cases: {}", v3.cases.join(", "));
        }
    }
    if let Some(b) = doc.verdict.bounds {
        println!("height bounds: h(f) <= {}, h(g) <= {}", b[0], b[1]);
    }
    if let Some(w) = &doc.witness {
        match (&w.f, &w.g) {
            (Some(f), Some(g)) => println!("witness: f = {f}, g = {g}"),
            _ => println!("witness: {}", w.note.as_deref().unwrap_or("existence only")),
        }
    }
    println!("verdict: {} (via {})", doc.verdict.kind, doc.verdict_source);
}

fn run_analyze(args: &PairArgs) -> Result<()> {
    let start = Instant::now();
    let loaded = load_pair(&args.input, &args.p, &args.q, args.genus)?;
    let report = analyze(AnalysisInput::new(loaded.p, loaded.q, loaded.genus)?)?;
    let doc = report_document(&report, loaded.echo, start.elapsed().as_millis() as u64);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
    } else {
        print_human_report(&doc);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub input: InputEcho,
    pub verdict: VerdictDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

fn run_classify(args: &PairArgs) -> Result<()> {
    let loaded = load_pair(&args.input, &args.p, &args.q, args.genus)?;
    let input = AnalysisInput::new(loaded.p, loaded.q, loaded.genus)?;
    let mut verdict = classify_theorem3(&input)?;
    if verdict.kind == VerdictKind::NonconstantExists {
        if verdict.cases.contains(&Case::E) {
            verdict.witness = Some(witness(Case::E, &input.p, &input.q, None)?);
        } else if verdict.cases.contains(&Case::A) {
            let cert = detect_linear_factor(&input.p, &input.q)?;
            verdict.witness = Some(witness(Case::A, &input.p, &input.q, cert)?);
        }
    }
    let doc = ClassifyDocument {
        input: loaded.echo,
        verdict: verdict_doc(&verdict),
        witness: verdict.witness.as_ref().map(witness_doc),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
    } else {
        match verdict.kind {
            VerdictKind::NonconstantExists => {
                println!(
                    "nonconstant solutions exist; cases: {}",
                    doc.verdict.cases.join(", ")
                );
                if let Some(w) = &doc.witness {
                    match (&w.f, &w.g) {
                        (Some(f), Some(g)) => println!("witness: f = {f}, g = {g}"),
                        _ => println!("witness: {}", w.note.as_deref().unwrap_or("existence only")),
                    }
                }
            }
            _ => println!("only constant solutions exist (none of the five conditions hold)"),
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<()> {
    let loaded = load_pair(&args.input, &args.p, &args.q, args.genus)?;
    let f_text = args
        .f
        .clone()
        .or(loaded.f)
        .ok_or_else(|| Error::InvalidArgument("verify needs f".into()))?;
    let g_text = args
        .g
        .clone()
        .or(loaded.g)
        .ok_or_else(|| Error::InvalidArgument("verify needs g".into()))?;
    let f = parse_rational_function(&f_text)?;
    let g = parse_rational_function(&g_text)?;
    let sol = SolutionPair::new(loaded.p, loaded.q, f, g)?;
    let rep = verify_solution_identities(&sol)?;
    let doc = identity_doc(&rep);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
    } else {
        println!(
            "degree relation n*h(f) = m*h(g): {} ({}*{} = {}*{})",
            ok_str(doc.degree_relation_ok),
            doc.n,
            doc.height_f,
            doc.m,
            doc.height_g
        );
        match (&doc.derivative_pair_lhs, &doc.derivative_pair_rhs) {
            (Some(l), Some(r)) => println!(
                "derivative pair bound: {} ({} <= {})",
                ok_str(doc.derivative_pair_ok.unwrap_or(false)),
                l,
                r
            ),
            _ => println!("derivative pair bound: skipped (distinctness hypothesis not met)"),
        }
        println!(
            "pole sum identity: {} ({} = {})",
            ok_str(doc.pole_sum_ok),
            doc.pole_sum_lhs,
            doc.pole_sum_rhs
        );
        println!(
            "local multiplicity checks: {} passed, {} failed, {} skipped (irrational)",
            doc.local_checks_passed, doc.local_checks_failed, doc.local_checks_skipped
        );
        println!("scaling invariance: {}", ok_str(doc.scaling_ok));
        if !doc.distinct {
            println!("note: distinctness hypothesis not met (f = g)");
        }
        println!("overall: {}", ok_str(doc.all_ok));
    }
    Ok(())
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "VIOLATED"
    }
}

fn run_witness(args: &PairArgs) -> Result<()> {
    let loaded = load_pair(&args.input, &args.p, &args.q, args.genus)?;
    let input = AnalysisInput::new(loaded.p, loaded.q, loaded.genus)?;
    let verdict = classify_theorem3(&input)?;
    let outcome = if verdict.cases.contains(&Case::E) {
        Some(witness(Case::E, &input.p, &input.q, None)?)
    } else if verdict.cases.contains(&Case::A) {
        let cert = detect_linear_factor(&input.p, &input.q)?;
        Some(witness(Case::A, &input.p, &input.q, cert)?)
    } else {
        None
    };
    let doc: WitnessDoc = match (&outcome, verdict.kind) {
        (Some(w), _) => witness_doc(w),
        (None, VerdictKind::NonconstantExists) => WitnessDoc {
            kind: "existence".into(),
            f: None,
            g: None,
            note: Some(format!(
                "nonconstant solutions exist (cases {}), but no rational constructor is available for them",
                verdict.cases.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
            )),
        },
        (None, _) => WitnessDoc {
            kind: "none".into(),
            f: None,
            g: None,
            note: Some("only constant solutions exist; no witness".into()),
        },
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
    } else {
        match (&doc.f, &doc.g) {
            (Some(f), Some(g)) => println!("f = {f}\ng = {g}"),
            _ => println!("{}", doc.note.as_deref().unwrap_or("no witness")),
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn run_corpus(args: &CorpusArgs) -> Result<()> {
    let text = read_input_text(&args.input)?;
    let docs: Vec<InputDocument> = serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: 0,
        message: format!("bad corpus document: {e}"),
    })?;
    let mut entries: Vec<CorpusEntry> = docs
        .par_iter()
        .enumerate()
        .map(|(index, doc)| {
            let start = Instant::now();
            let run = || -> Result<ReportDocument> {
                let p = doc.p.to_polynomial()?;
                let q = doc.q.to_polynomial()?;
                let echo = InputEcho {
                    p: pretty(&p, "x"),
                    q: pretty(&q, "y"),
                    genus: doc.genus,
                };
                let report = analyze(AnalysisInput::new(p, q, doc.genus)?)?;
                Ok(report_document(&report, echo, start.elapsed().as_millis() as u64))
            };
            match run() {
                Ok(report) => CorpusEntry {
                    index,
                    report: Some(report),
                    error: None,
                },
                Err(e) => CorpusEntry {
                    index,
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    entries.sort_by_key(|e| e.index);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&entries).expect("serializable report"));
    } else {
        for e in &entries {
            match (&e.report, &e.error) {
                (Some(r), _) => println!(
                    "[{}] {} vs {}: {} (via {})",
                    e.index, r.input.p, r.input.q, r.verdict.kind, r.verdict_source
                ),
                (None, Some(err)) => println!("[{}] error: {err}", e.index),
                _ => {}
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleCheckDocument {
    pub input: InputEcho,
    pub ambiguous: bool,
    pub agree: bool,
    pub exact_b0_sum: String,
    pub exact_b1_sum: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_b0_sum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_b1_sum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn run_oracle_check(args: &PairArgs) -> Result<()> {
    let loaded = load_pair(&args.input, &args.p, &args.q, args.genus)?;
    let prof_p = critical_profile(&loaded.p)?;
    let prof_q = critical_profile(&loaded.q)?;
    let exact_b0 = unmatched_weight(&prof_p, &prof_q)?;
    let exact_b1 = unmatched_weight(&prof_q, &prof_p)?;
    let exact_counts = if prof_p.hypothesis_i && prof_q.hypothesis_i {
        Some(match_matrix(&prof_p, &prof_q)?.counts)
    } else {
        None
    };
    let tol = Rat::new(1.into(), num_bigint::BigInt::from(10).pow(20));
    let outcome = numeric_cross_check(&loaded.p, &loaded.q, &tol)?;
    let doc = match outcome {
        CrossCheckOutcome::Ambiguous(detail) => OracleCheckDocument {
            input: loaded.echo,
            ambiguous: true,
            agree: false,
            exact_b0_sum: rs(&exact_b0),
            exact_b1_sum: rs(&exact_b1),
            numeric_b0_sum: None,
            numeric_b1_sum: None,
            detail: Some(detail),
        },
        CrossCheckOutcome::Counts(c) => {
            let counts_agree = exact_counts
                .map(|exact| exact.iter().map(|(k, v)| (*k, *v)).collect::<BTreeMap<_, _>>() == c.counts)
                .unwrap_or(true);
            let agree = counts_agree && c.b0_sum == exact_b0 && c.b1_sum == exact_b1;
            OracleCheckDocument {
                input: loaded.echo,
                ambiguous: false,
                agree,
                exact_b0_sum: rs(&exact_b0),
                exact_b1_sum: rs(&exact_b1),
                numeric_b0_sum: Some(rs(&c.b0_sum)),
                numeric_b1_sum: Some(rs(&c.b1_sum)),
                detail: None,
            }
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
    } else if doc.ambiguous {
        println!("ambiguous: {}", doc.detail.as_deref().unwrap_or("-"));
    } else {
        println!(
            "exact and numeric critical-value matching {}",
            if doc.agree { "agree" } else { "DISAGREE" }
        );
    }
    Ok(())
}

/// Runs the CLI on the given argument vector and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exit
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.cmd {
        Cmd::Analyze(a) => run_analyze(a),
        Cmd::Classify(a) => run_classify(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Witness(a) => run_witness(a),
        Cmd::Corpus(a) => run_corpus(a),
        Cmd::OracleCheck(a) => run_oracle_check(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_document_forms() {
        let doc: InputDocument =
            serde_json::from_str(r#"{"P": "x^2", "Q": ["1/2", "0", "1"], "genus": 1}"#).unwrap();
        assert_eq!(doc.p.to_polynomial().unwrap(), Polynomial::from_ints(&[0, 0, 1]));
        let q = doc.q.to_polynomial().unwrap();
        assert_eq!(q.coeff(0), crate::ratpoly::ratio(1, 2));
        assert_eq!(doc.genus, 1);
    }

    #[test]
    fn report_document_roundtrip() {
        let input = AnalysisInput::new(
            Polynomial::from_ints(&[0, -5, 0, 0, 0, 1]),
            Polynomial::from_ints(&[0, 0, 1]),
            0,
        )
        .unwrap();
        let report = analyze(input).unwrap();
        let doc = report_document(
            &report,
            InputEcho {
                p: "x^5 - 5*x".into(),
                q: "y^2".into(),
                genus: 0,
            },
            0,
        );
        assert_eq!(doc.s0, "1/2");
        assert_eq!(doc.verdict.kind, "ConstantsOnly");
        let json = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn witness_attached_for_conic() {
        let report = analyze(
            AnalysisInput::new(
                Polynomial::from_ints(&[0, 0, 1]),
                Polynomial::from_ints(&[1, 0, 1]),
                0,
            )
            .unwrap(),
        )
        .unwrap();
        let doc = report_document(
            &report,
            InputEcho {
                p: "x^2".into(),
                q: "y^2+1".into(),
                genus: 0,
            },
            0,
        );
        let w = doc.witness.unwrap();
        assert_eq!(w.kind, "pair");
        assert!(w.f.is_some() && w.g.is_some());
    }
}
