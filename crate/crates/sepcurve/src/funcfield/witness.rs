//! Construction of explicit nonconstant solutions for the two cases where
//! one exists over Q whenever the obstruction vanishes: a linear factor
//! with rational slope, and the conic case n = m = 2.

use crate::criteria::{detect_linear_factor, Case, LinearFactorCertificate};
use crate::error::{Error, Result};
use crate::funcfield::{RationalFunction, SolutionPair};
use crate::ratpoly::{rat, rat_sqrt, Polynomial};

/// Either a fully verified rational solution or a proof-backed existence
/// statement with the exact obstruction to writing one over Q.
#[derive(Clone, Debug)]
pub enum WitnessOutcome {
    Pair(SolutionPair),
    ExistenceOnly(String),
}

/// Builds a witness for a satisfied case. Case A: g = t, f = a t + b from a
/// rational root of the certificate. Case n = m = 2: complete both squares;
/// with c = Q(beta) - P(alpha) != 0 the conic p2 (f-alpha)^2 - q2 (g-beta)^2 = c
/// has the standard parametrization whenever p2 and q2 are rational squares.
pub fn witness(
    case: Case,
    p: &Polynomial,
    q: &Polynomial,
    certificate: Option<LinearFactorCertificate>,
) -> Result<WitnessOutcome> {
    match case {
        Case::A => witness_linear(p, q, certificate),
        Case::E => witness_conic(p, q),
        other => Err(Error::InvalidArgument(format!(
            "witness construction covers cases A and E, not {other}"
        ))),
    }
}

fn witness_linear(
    p: &Polynomial,
    q: &Polynomial,
    certificate: Option<LinearFactorCertificate>,
) -> Result<WitnessOutcome> {
    let cert = match certificate {
        Some(c) => c,
        None => detect_linear_factor(p, q)?.ok_or_else(|| {
            Error::InvalidArgument("P(X) - Q(Y) has no linear factor".into())
        })?,
    };
    match cert.rational_solution()? {
        Some((a, b)) => {
            let f = RationalFunction::from_poly(Polynomial::new(vec![b, a]));
            let g = RationalFunction::t();
            Ok(WitnessOutcome::Pair(SolutionPair::new(
                p.clone(),
                q.clone(),
                f,
                g,
            )?))
        }
        None => Ok(WitnessOutcome::ExistenceOnly(format!(
            "a linear factor exists with slope satisfying {}, which has no rational root",
            cert.min_poly
        ))),
    }
}

fn witness_conic(p: &Polynomial, q: &Polynomial) -> Result<WitnessOutcome> {
    if p.degree() != Some(2) || q.degree() != Some(2) {
        return Err(Error::InvalidArgument(
            "the conic construction needs deg P = deg Q = 2".into(),
        ));
    }
    let p2 = p.coeff(2);
    let q2 = q.coeff(2);
    let alpha = -p.coeff(1) / (rat(2) * &p2);
    let beta = -q.coeff(1) / (rat(2) * &q2);
    let c = q.eval(&beta) - p.eval(&alpha);
    if c == rat(0) {
        // vertices at the same value: the difference of squares splits
        return witness_linear(p, q, None);
    }
    match (rat_sqrt(&p2), rat_sqrt(&q2)) {
        (Some(sp), Some(sq)) => {
            // f = alpha + (t^2 + c)/(2 sp t), g = beta + (t^2 - c)/(2 sq t)
            let f = RationalFunction::new(
                Polynomial::new(vec![c.clone(), rat(2) * &sp * &alpha, rat(1)]),
                Polynomial::new(vec![rat(0), rat(2) * sp]),
            )?;
            let g = RationalFunction::new(
                Polynomial::new(vec![-&c, rat(2) * &sq * &beta, rat(1)]),
                Polynomial::new(vec![rat(0), rat(2) * sq]),
            )?;
            Ok(WitnessOutcome::Pair(SolutionPair::new(
                p.clone(),
                q.clone(),
                f,
                g,
            )?))
        }
        _ => Ok(WitnessOutcome::ExistenceOnly(format!(
            "parametrizing the conic over Q needs {p2} and {q2} to be rational squares; \
             a quadratic extension always suffices"
        ))),
    }
}

/// Test-family generator: P = R(x^a), Q = R(y^b), f = M^b, g = M^a, so that
/// P(f) = R(M^(ab)) = Q(g) identically.
pub fn generate_test_solution(
    r: &Polynomial,
    a: u32,
    b: u32,
    m: &RationalFunction,
) -> Result<SolutionPair> {
    if r.is_constant() {
        return Err(Error::InvalidArgument("R must be nonconstant".into()));
    }
    if m.is_constant() {
        return Err(Error::InvalidArgument("M must be nonconstant".into()));
    }
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("exponents must be positive".into()));
    }
    let p = r.compose(&Polynomial::monomial(a as usize, rat(1)));
    let q = r.compose(&Polynomial::monomial(b as usize, rat(1)));
    SolutionPair::new(p, q, m.pow(b), m.pow(a))
}
