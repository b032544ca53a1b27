//! Numeric cross-validator for the exact critical-value computations.
//!
//! High-precision simultaneous root finding (Aberth iteration on all roots
//! at once) shadows the resultant-based machinery; tolerance clustering of
//! the critical values is compared against the exact matched-pair counts in
//! the test suite. Nothing here feeds back into any verdict: a disagreement
//! is a test failure, an ambiguity is reported as such, and non-convergence
//! is an error rather than a wrong answer.

use std::collections::BTreeMap;

use astro_float::{BigFloat, RoundingMode, WORD_BIT_SIZE};
use num_bigint::{BigInt, Sign};
use num_traits::{Signed as _, ToPrimitive, Zero};

use crate::critical::critical_profile;
use crate::error::{Error, Result};
use crate::ratpoly::{rat, Polynomial, Rat};

const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;

fn shifted(x: &BigFloat, k: i64) -> BigFloat {
    if x.is_zero() {
        return x.clone();
    }
    let mut y = x.clone();
    let e = y.exponent().expect("finite value");
    y.set_exponent(e + k as i32);
    y
}

fn bigint_to_float(n: &BigInt, p: usize) -> BigFloat {
    let mut acc = BigFloat::from_u64(0, p);
    for d in n.magnitude().to_u64_digits().iter().rev() {
        acc = shifted(&acc, 64).add(&BigFloat::from_u64(*d, p), p, RM);
    }
    if n.sign() == Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

fn rat_to_float(r: &Rat, p: usize) -> BigFloat {
    let num = bigint_to_float(r.numer(), p);
    let den = bigint_to_float(r.denom(), p);
    num.div(&den, p, RM)
}

/// Exact rational value of a finite BigFloat (mantissa times a power of
/// two).
fn float_to_rat(x: &BigFloat) -> Rat {
    if x.is_zero() {
        return rat(0);
    }
    let digits = x.mantissa_digits().expect("finite value");
    let mut m = BigInt::from(0);
    for d in digits.iter().rev() {
        m = (m << 64) + BigInt::from(*d);
    }
    if x.is_negative() {
        m = -m;
    }
    let nbits = digits.len() as i64 * WORD_BIT_SIZE as i64;
    let e = x.exponent().expect("finite value") as i64;
    let shift = e - nbits;
    if shift >= 0 {
        Rat::from_integer(m << shift)
    } else {
        Rat::new(m, BigInt::from(1) << (-shift))
    }
}

/// Complex number on a pair of BigFloats. Operations take the working
/// precision explicitly.
#[derive(Clone, Debug)]
struct Cx {
    re: BigFloat,
    im: BigFloat,
}

impl Cx {
    fn real(x: BigFloat, p: usize) -> Self {
        Cx {
            re: x,
            im: BigFloat::from_u64(0, p),
        }
    }

    fn add(&self, o: &Cx, p: usize) -> Cx {
        Cx {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    fn sub(&self, o: &Cx, p: usize) -> Cx {
        Cx {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }

    fn mul(&self, o: &Cx, p: usize) -> Cx {
        Cx {
            re: self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM),
            im: self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM),
        }
    }

    fn div(&self, o: &Cx, p: usize) -> Cx {
        let d = o.abs2(p);
        let num = self.mul(
            &Cx {
                re: o.re.clone(),
                im: o.im.neg(),
            },
            p,
        );
        Cx {
            re: num.re.div(&d, p, RM),
            im: num.im.div(&d, p, RM),
        }
    }

    fn abs2(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    fn abs(&self, p: usize) -> BigFloat {
        self.abs2(p).sqrt(p, RM)
    }
}

fn horner(coeffs: &[Cx], z: &Cx, p: usize) -> Cx {
    let mut acc = Cx::real(BigFloat::from_u64(0, p), p);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, p).add(c, p);
    }
    acc
}

/// An approximate root with a radius certifying how far the nearest true
/// root can be (deg * |A/A'| at the returned point).
#[derive(Clone, Debug)]
pub struct ApproxRoot {
    pub re: BigFloat,
    pub im: BigFloat,
    pub radius: BigFloat,
}

impl ApproxRoot {
    /// Exact rational shadow of the center (the float values themselves).
    pub fn center(&self) -> (Rat, Rat) {
        (float_to_rat(&self.re), float_to_rat(&self.im))
    }
}

/// All roots of a squarefree polynomial by simultaneous Aberth iteration at
/// the given precision. Errors on non-squarefree input and on
/// non-convergence; never silently returns inaccurate roots.
pub fn numeric_roots(a: &Polynomial, precision_bits: usize) -> Result<Vec<ApproxRoot>> {
    let n = match a.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "root finding needs a nonconstant polynomial, got {a}"
            )))
        }
    };
    if !a.is_squarefree()? {
        return Err(Error::InvalidArgument(format!("{a} is not squarefree")));
    }
    let p = precision_bits.max(64);
    let monic = a.monic();
    let coeffs: Vec<Cx> = monic
        .coeffs()
        .iter()
        .map(|c| Cx::real(rat_to_float(c, p), p))
        .collect();
    let dcoeffs: Vec<Cx> = monic
        .derivative()
        .coeffs()
        .iter()
        .map(|c| Cx::real(rat_to_float(c, p), p))
        .collect();

    // initial ring of guesses just outside the root bound
    let bound = 1.0
        + monic
            .coeffs()
            .iter()
            .take(n)
            .map(|c| c.to_f64().map_or(f64::MAX, f64::abs))
            .fold(0.0, f64::max);
    let mut zs: Vec<Cx> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7;
            Cx {
                re: BigFloat::from_f64(bound * theta.cos(), p),
                im: BigFloat::from_f64(bound * theta.sin(), p),
            }
        })
        .collect();

    // residual target: comfortably below 2^(-precision/2) even after
    // rescaling by the original leading coefficient
    let mut eps = BigFloat::from_u64(1, p);
    eps = shifted(&eps, -((precision_bits as i64) / 2 + 32));
    let one = Cx::real(BigFloat::from_u64(1, p), p);

    let max_iter = 400;
    let mut last_residual = BigFloat::from_u64(0, p);
    for _iter in 0..max_iter {
        let mut max_residual = BigFloat::from_u64(0, p);
        let mut next = zs.clone();
        for k in 0..n {
            let pz = horner(&coeffs, &zs[k], p);
            let res = pz.abs(p);
            if max_residual < res {
                max_residual = res.clone();
            }
            let dz = horner(&dcoeffs, &zs[k], p);
            if dz.abs2(p).is_zero() {
                // sitting exactly on a critical point: nudge away
                next[k] = zs[k].add(&Cx::real(BigFloat::from_f64(1e-3, p), p), p);
                continue;
            }
            let w = pz.div(&dz, p);
            let mut s = Cx::real(BigFloat::from_u64(0, p), p);
            for j in 0..n {
                if j != k {
                    let d = zs[k].sub(&zs[j], p);
                    if d.abs2(p).is_zero() {
                        continue;
                    }
                    s = s.add(&one.div(&d, p), p);
                }
            }
            let denom = one.sub(&w.mul(&s, p), p);
            let corr = if denom.abs2(p).is_zero() {
                w.clone()
            } else {
                w.div(&denom, p)
            };
            next[k] = zs[k].sub(&corr, p);
        }
        zs = next;
        last_residual = max_residual.clone();
        if max_residual < eps {
            let mut out = Vec::with_capacity(n);
            let nf = BigFloat::from_u64(n as u64, p);
            for z in &zs {
                let pz = horner(&coeffs, z, p).abs(p);
                let dz = horner(&dcoeffs, z, p).abs(p);
                let radius = if dz.is_zero() {
                    BigFloat::from_f64(f64::MAX, p)
                } else {
                    nf.mul(&pz.div(&dz, p, RM), p, RM)
                };
                out.push(ApproxRoot {
                    re: z.re.clone(),
                    im: z.im.clone(),
                    radius,
                });
            }
            return Ok(out);
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        max_residual: format!("{last_residual}"),
    })
}

/// Matched-pair counts and unmatched weights recomputed numerically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckCounts {
    pub counts: BTreeMap<(u32, u32), usize>,
    pub b0_sum: Rat,
    pub b1_sum: Rat,
}

#[derive(Clone, Debug)]
pub enum CrossCheckOutcome {
    Counts(CrossCheckCounts),
    /// Some cross distance fell inside the band [tolerance, 10*tolerance):
    /// too close to call either way.
    Ambiguous(String),
}

fn class_values(poly: &Polynomial, p: usize) -> Result<Vec<(u32, Cx)>> {
    let prof = critical_profile(poly)?;
    let coeffs: Vec<Cx> = poly
        .coeffs()
        .iter()
        .map(|c| Cx::real(rat_to_float(c, p), p))
        .collect();
    let mut out = Vec::new();
    for class in &prof.classes {
        for root in numeric_roots(&class.class_factor, p)? {
            let z = Cx {
                re: root.re,
                im: root.im,
            };
            out.push((class.multiplicity, horner(&coeffs, &z, p)));
        }
    }
    Ok(out)
}

/// Recomputes the critical-value matching numerically: values within
/// `tolerance` are matched, distances inside [tolerance, 10*tolerance) make
/// the whole answer Ambiguous.
pub fn numeric_cross_check(
    p: &Polynomial,
    q: &Polynomial,
    tolerance: &Rat,
) -> Result<CrossCheckOutcome> {
    if !tolerance.is_positive() {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let prec = DEFAULT_PRECISION;
    let tol = rat_to_float(tolerance, prec);
    let tol10 = tol.mul(&BigFloat::from_u64(10, prec), prec, RM);

    let vp = class_values(p, prec)?;
    let vq = class_values(q, prec)?;

    let mut counts: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut p_matched = vec![false; vp.len()];
    let mut q_matched = vec![false; vq.len()];
    for (i, (e, zp)) in vp.iter().enumerate() {
        for (j, (d, zq)) in vq.iter().enumerate() {
            let dist = zp.sub(zq, prec).abs(prec);
            if dist < tol {
                *counts.entry((*e, *d)).or_insert(0) += 1;
                p_matched[i] = true;
                q_matched[j] = true;
            } else if dist < tol10 {
                return Ok(CrossCheckOutcome::Ambiguous(format!(
                    "critical-value distance {dist} lies in the ambiguity band"
                )));
            }
        }
    }
    let b0_sum = vp
        .iter()
        .zip(&p_matched)
        .filter(|(_, m)| !**m)
        .map(|((e, _), _)| rat(*e as i64))
        .sum();
    let b1_sum = vq
        .iter()
        .zip(&q_matched)
        .filter(|(_, m)| !**m)
        .map(|((d, _), _)| rat(*d as i64))
        .sum();
    Ok(CrossCheckOutcome::Counts(CrossCheckCounts {
        counts,
        b0_sum,
        b1_sum,
    }))
}

#[cfg(test)]
fn cx_eval_exact(poly: &Polynomial, re: &Rat, im: &Rat) -> (Rat, Rat) {
    let mut acc_re = rat(0);
    let mut acc_im = rat(0);
    for c in poly.coeffs().iter().rev() {
        let nre = &acc_re * re - &acc_im * im + c;
        let nim = &acc_re * im + &acc_im * re;
        acc_re = nre;
        acc_im = nim;
    }
    (acc_re, acc_im)
}

fn abs2(re: &Rat, im: &Rat) -> Rat {
    re * re + im * im
}

/// Evaluates an integer polynomial at re + i*im, where both parts have
/// power-of-two denominators, entirely in integers: returns (R, I, S) with
/// value = (R + i*I)/S and S the common denominator raised to the degree.
fn cx_eval_int(coeffs: &[BigInt], re: &Rat, im: &Rat) -> (BigInt, BigInt, BigInt) {
    use num_integer::Integer;
    let d: BigInt = re.denom().lcm(im.denom());
    let u = re.numer() * (&d / re.denom());
    let v = im.numer() * (&d / im.denom());
    let n = coeffs.len().saturating_sub(1);
    let mut acc_re = coeffs.last().cloned().unwrap_or_default();
    let mut acc_im = BigInt::from(0);
    let mut dpow = BigInt::from(1);
    for j in (0..n).rev() {
        dpow *= &d;
        let nre = &acc_re * &u - &acc_im * &v + &coeffs[j] * &dpow;
        let nim = &acc_re * &v + &acc_im * &u;
        acc_re = nre;
        acc_im = nim;
    }
    (acc_re, acc_im, dpow)
}

/// Rational upper bound on sqrt(x) for x >= 0.
fn sqrt_upper(x: &Rat) -> Rat {
    if x.is_zero() {
        return rat(0);
    }
    let (a, b) = (x.numer().clone(), x.denom().clone());
    Rat::new((&a * &b).sqrt() + 1, b)
}

/// Rational lower bound on sqrt(x) for x >= 0.
fn sqrt_lower(x: &Rat) -> Rat {
    if x.is_zero() {
        return rat(0);
    }
    let (a, b) = (x.numer().clone(), x.denom().clone());
    Rat::new((&a * &b).sqrt(), b)
}

/// Certifies by exact arithmetic that every pair of distinct critical
/// values of P and Q is at least `threshold` apart. Encloses each root of
/// the combined squarefree critical-value polynomial in a disk centered at
/// an exact rational shadow of the numeric root, with radius
/// deg * |W(c)/W'(c)| (a disk that always contains a true root); pairwise
/// disjointness with margin then bounds every true gap from below.
pub fn certify_value_gap(p: &Polynomial, q: &Polynomial, threshold: &Rat) -> Result<bool> {
    let prof_p = critical_profile(p)?;
    let prof_q = critical_profile(q)?;
    let w = (&prof_p.value_product() * &prof_q.value_product()).squarefree_part()?;
    let n = w.deg();
    if n <= 1 {
        return Ok(true);
    }
    // 128 bits is ample for locating centers: the certificate below is
    // exact regardless of root quality, poorer roots only inflate radii.
    let roots = numeric_roots(&w, DEFAULT_PRECISION)?;
    // The disk bound n*|W(c)/W'(c)| holds for any rational center c and is
    // invariant under scaling W, so use short centers (64-bit shadows) and
    // primitive integer coefficients to keep the exact arithmetic small.
    let w_int = w.primitive_int();
    let dw_int: Vec<BigInt> = w_int
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c * BigInt::from(j))
        .collect();
    let nn = BigInt::from(n as i64);
    let mut centers = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for r in &roots {
        let mut short_re = r.re.clone();
        let mut short_im = r.im.clone();
        let _ = short_re.set_precision(64, RoundingMode::ToEven);
        let _ = short_im.set_precision(64, RoundingMode::ToEven);
        let (re, im) = (float_to_rat(&short_re), float_to_rat(&short_im));
        // W(c) = (w_re + i*w_im)/s_w and W'(c) = (d_re + i*d_im)/s_d with
        // dyadic scales, so r^2 = n^2 |W/W'|^2 is an integer ratio
        let (w_re, w_im, s_w) = cx_eval_int(&w_int, &re, &im);
        let (d_re, d_im, s_d) = cx_eval_int(&dw_int, &re, &im);
        let num = &nn * &nn * (&w_re * &w_re + &w_im * &w_im) * (&s_d * &s_d);
        let den = (&d_re * &d_re + &d_im * &d_im) * (&s_w * &s_w);
        if den.is_zero() {
            return Ok(false);
        }
        // dyadic ceiling of num/den at 128 bits, then an upper square root
        let up = ((num << 128u32) + &den - 1) / den;
        radii.push(sqrt_upper(&Rat::new(up, BigInt::from(1) << 128u32)));
        centers.push((re, im));
    }
    for i in 0..n {
        for j in i + 1..n {
            let dre = &centers[i].0 - &centers[j].0;
            let dim = &centers[i].1 - &centers[j].1;
            let lower = sqrt_lower(&abs2(&dre, &dim));
            if lower < threshold + &radii[i] + &radii[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
