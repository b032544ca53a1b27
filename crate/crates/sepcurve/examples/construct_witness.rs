//! Construct explicit nonconstant solutions over Q(t) for the two
//! constructive exceptional shapes: a shared linear factor of the curve
//! (case A) and the conic case of two quadratics (case E).
//!
//! Run with: cargo run --example construct_witness

use sepcurve::cli::parse_polynomial;
use sepcurve::criteria::{detect_linear_factor, Case};
use sepcurve::funcfield::{witness, WitnessOutcome};

fn main() -> Result<(), sepcurve::Error> {
    // Case A: the curve 3x^4 - 4x^3 = 3y^4 + 4y^3 contains the line y = -x.
    let p = parse_polynomial("3*x^4 - 4*x^3")?;
    let q = parse_polynomial("3*y^4 + 4*y^3")?;
    let cert = detect_linear_factor(&p, &q)?;
    match witness(Case::A, &p, &q, cert)? {
        WitnessOutcome::Pair(sol) => println!("case A witness: f = {}, g = {}", sol.f, sol.g),
        WitnessOutcome::ExistenceOnly(note) => println!("case A: {note}"),
    }

    // Case E: two quadratics; x^2 = y^2 + 1 is a conic with a rational point.
    let p = parse_polynomial("x^2")?;
    let q = parse_polynomial("y^2 + 1")?;
    match witness(Case::E, &p, &q, None)? {
        WitnessOutcome::Pair(sol) => println!("case E witness: f = {}, g = {}", sol.f, sol.g),
        WitnessOutcome::ExistenceOnly(note) => println!("case E: {note}"),
    }

    // Case E where the conic has no rational parametrization over Q.
    let p = parse_polynomial("x^2")?;
    let q = parse_polynomial("3*y^2 + 1")?;
    match witness(Case::E, &p, &q, None)? {
        WitnessOutcome::Pair(sol) => println!("unexpected pair: f = {}, g = {}", sol.f, sol.g),
        WitnessOutcome::ExistenceOnly(note) => println!("case E obstruction: {note}"),
    }
    Ok(())
}
