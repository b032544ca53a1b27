//! Full analysis of one curve P(X) - Q(Y) = 0: exact criterion values,
//! per-criterion verdicts, and the combined verdict.
//!
//! Run with: cargo run --example analyze_pair

use sepcurve::cli::parse_polynomial;
use sepcurve::criteria::{analyze, AnalysisInput};

fn main() -> Result<(), sepcurve::Error> {
    let p = parse_polynomial("x^5 - 5*x")?;
    let q = parse_polynomial("y^2")?;
    let report = analyze(AnalysisInput::new(p, q, 0)?)?;

    println!("n = {}, m = {}", report.input.n(), report.input.m());
    let (vals, _) = &report.theorem1;
    println!("b0_sum = {}, b1_sum = {}", vals.b0_sum, vals.b1_sum);
    println!("s0 = {}, s1 = {}", vals.s0, vals.s1);
    match &report.theorem2 {
        Ok((vals2, _)) => println!("s2 = {}", vals2.s2.as_ref().expect("s2 present")),
        Err(reason) => println!("s2 unavailable: {reason}"),
    }
    println!("verdict: {:?} (via {})", report.verdict.kind, report.verdict_source);
    for note in &report.verdict.notes {
        println!("note: {note}");
    }
    Ok(())
}
