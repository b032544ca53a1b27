//! Inspect the critical structure of a polynomial: multiplicity classes of
//! its derivative, exact critical-value polynomials, the
//! distinct-critical-values check, and matched/unmatched weights between
//! two polynomials.
//!
//! Run with: cargo run --example critical_structure

use sepcurve::cli::parse_polynomial;
use sepcurve::critical::{critical_profile, match_matrix, unmatched_weight};
use sepcurve::ratpoly::pretty;

fn main() -> Result<(), sepcurve::Error> {
    let p = parse_polynomial("3*x^4 - 4*x^3")?;
    let q = parse_polynomial("3*y^4 + 4*y^3")?;

    for (name, poly) in [("P", &p), ("Q", &q)] {
        let prof = critical_profile(poly)?;
        println!("{name} = {}", pretty(poly, "x"));
        for class in &prof.classes {
            println!(
                "  multiplicity {}: critical points of {} take values described by {}",
                class.multiplicity,
                pretty(&class.class_factor, "x"),
                pretty(&class.value_poly, "z"),
            );
        }
        println!("  distinct critical values: {}", prof.hypothesis_i);
    }

    let prof_p = critical_profile(&p)?;
    let prof_q = critical_profile(&q)?;
    println!("b0_sum = {}", unmatched_weight(&prof_p, &prof_q)?);
    println!("b1_sum = {}", unmatched_weight(&prof_q, &prof_p)?);
    let matrix = match_matrix(&prof_p, &prof_q)?;
    for ((e, d), count) in &matrix.counts {
        println!("shared critical values with multiplicities ({e}, {d}): {count}");
    }
    Ok(())
}
