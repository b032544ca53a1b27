//! Generate solvable test instances from the composition family
//! P = R(x^a), Q = R(y^b), f = M^b, g = M^a (so P(f) = Q(g) identically),
//! then confirm every height identity on each generated pair.
//!
//! Run with: cargo run --example generate_solutions

use sepcurve::cli::{parse_polynomial, parse_rational_function};
use sepcurve::funcfield::{generate_test_solution, verify_solution_identities};

fn main() -> Result<(), sepcurve::Error> {
    let r = parse_polynomial("x^2 - x + 3")?;
    let mobius = [
        parse_rational_function("t")?,
        parse_rational_function("(t+1)/(t-2)")?,
        parse_rational_function("(2*t - 5)/(t)")?,
    ];
    for (a, b) in [(2u32, 3u32), (3, 2), (2, 5)] {
        for m in &mobius {
            let sol = generate_test_solution(&r, a, b, m)?;
            let rep = verify_solution_identities(&sol)?;
            println!(
                "R(x^{a}) vs R(y^{b}), M = {m}: h(f) = {}, h(g) = {}, all identities {}",
                rep.height_f,
                rep.height_g,
                if rep.all_ok() { "hold" } else { "FAIL" },
            );
        }
    }
    Ok(())
}
