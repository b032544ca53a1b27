//! Cross-validate the exact critical-value matching against an independent
//! high-precision numeric computation (simultaneous Aberth root finding with
//! certified residual bounds).
//!
//! Run with: cargo run --example numeric_cross_check

use num_bigint::BigInt;
use sepcurve::cli::parse_polynomial;
use sepcurve::oracle::{certify_value_gap, numeric_cross_check, numeric_roots, CrossCheckOutcome, DEFAULT_PRECISION};
use sepcurve::Rat;

fn main() -> Result<(), sepcurve::Error> {
    // All roots of z^4 - 256 to 256 bits, with per-root radius bounds.
    let roots = numeric_roots(&parse_polynomial("z^4 - 256")?, DEFAULT_PRECISION)?;
    for r in &roots {
        let (re, im) = r.center();
        println!("root near ({:.6}, {:.6})", rat_f64(&re), rat_f64(&im));
    }

    // Exact vs numeric matched-pair counts for a pair of quartics.
    let p = parse_polynomial("x^5 - 5*x")?;
    let q = parse_polynomial("y^2")?;
    let tol = Rat::new(1.into(), BigInt::from(10).pow(20));
    match numeric_cross_check(&p, &q, &tol)? {
        CrossCheckOutcome::Counts(c) => {
            println!("numeric b0_sum = {}, b1_sum = {}", c.b0_sum, c.b1_sum);
            for ((e, d), count) in &c.counts {
                println!("matched pairs with multiplicities ({e}, {d}): {count}");
            }
        }
        CrossCheckOutcome::Ambiguous(detail) => println!("ambiguous: {detail}"),
    }

    // Certify that no cross distance between critical values sneaks inside
    // a gap, which is what makes the tolerance choice honest.
    let gap = Rat::new(1.into(), BigInt::from(10).pow(6));
    println!("critical-value gap >= 10^-6 certified: {}", certify_value_gap(&p, &q, &gap)?);
    Ok(())
}

fn rat_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
