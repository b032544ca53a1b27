//! Parse polynomial and rational-function expressions into exact
//! coefficients: integer, fraction, and decimal coefficients, implicit
//! multiplication, and positioned error reporting.
//!
//! Run with: cargo run --example parse_expressions

use sepcurve::cli::{parse_polynomial, parse_rational_function};
use sepcurve::ratpoly::pretty;

fn main() -> Result<(), sepcurve::Error> {
    for text in ["3*x^4 - 4*x^3", "x^2 + 1/2", "0.25*x + 1.5", "-x^2 + 3x - 7"] {
        let p = parse_polynomial(text)?;
        println!("{text:>18}  =>  {}  (degree {})", pretty(&p, "x"), p.deg());
    }

    let f = parse_rational_function("(t^2+1)/(2*t)")?;
    println!("rational function: {f}, height {}", f.height());

    match parse_polynomial("x^2 $ 3") {
        Err(e) => println!("rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
