//! Complete existence classification in the genus-0, equal-degree case:
//! which of the five exceptional shapes (A)-(E) a pair falls into, if any.
//!
//! Run with: cargo run --example classify_genus_zero

use sepcurve::cli::parse_polynomial;
use sepcurve::criteria::{classify_theorem3, AnalysisInput, VerdictKind};

fn main() -> Result<(), sepcurve::Error> {
    let fixtures = [
        ("x^2", "y^2 + 1"),
        ("3*x^4 - 4*x^3", "3*y^4 + 4*y^3"),
        ("x^3", "y^3 - 3*y + 2"),
        // matching cubic critical-value sets without affine equivalence
        ("x^4 - 3*x^2 + x", "-27*y^4 + 18*y^2 + y - 7/2"),
        ("x^5 - 5*x", "y^5 - 5*y + 1"),
    ];
    for (pt, qt) in fixtures {
        let input = AnalysisInput::new(parse_polynomial(pt)?, parse_polynomial(qt)?, 0)?;
        let verdict = classify_theorem3(&input)?;
        let cases: Vec<String> = verdict.cases.iter().map(|c| c.to_string()).collect();
        match verdict.kind {
            VerdictKind::NonconstantExists => {
                println!("({pt}, {qt}): nonconstant solutions exist, cases {{{}}}", cases.join(", "))
            }
            _ => println!("({pt}, {qt}): only constant solutions"),
        }
    }
    Ok(())
}
