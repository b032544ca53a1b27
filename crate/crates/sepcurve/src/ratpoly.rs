//! Exact rational arithmetic and dense univariate polynomial algebra over Q.
//!
//! Everything downstream (critical structure, criteria, the Q(t) harness)
//! reduces to the operations in this module: gcd by primitive pseudo-remainder
//! sequences over Z, Yun squarefree decomposition, resultants of a univariate
//! polynomial against a polynomial with Q\[z\]-coefficients, composition, and
//! coprime parts.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps the reduced-form invariant
/// (lowest terms, positive denominator, zero as 0/1) for us.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational square root, if the argument is a square in Q.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Dense univariate polynomial over Q, coefficients ascending by exponent.
///
/// The zero polynomial is the empty coefficient list; otherwise the
/// highest-index coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Polynomial::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * x^d`.
    pub fn monomial(d: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); d + 1];
        v[d] = c;
        Polynomial::new(v)
    }

    /// Convenience constructor from small integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial; `None` is the zero polynomial's
    /// degree sentinel (conceptually minus infinity).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as usize, treating zero as 0. Convenient where the caller has
    /// already excluded the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic normalization; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.coeffs.last() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if div.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let dd = div.deg();
        let lc = div.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd || (dd == 0 && !rem.is_empty()) {
            if rem.last().map_or(true, |c| c.is_zero()) {
                rem.pop();
                if rem.is_empty() {
                    break;
                }
                continue;
            }
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lc;
            for i in 0..=dd {
                let t = &div.coeffs[i] * &factor;
                rem[shift + i] = &rem[shift + i] - t;
            }
            quot[shift] = &quot[shift] + factor;
            // leading term cancels exactly
            rem.pop();
            if dd == 0 && rem.is_empty() {
                break;
            }
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, div: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divrem(div)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact polynomial division: remainder {r}"
            )));
        }
        Ok(q)
    }

    /// True iff `div` divides `self` with zero remainder.
    pub fn divides_into(&self, div: &Polynomial) -> bool {
        match self.divrem(div) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// `P(inner)`, by Horner evaluation in the polynomial ring.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of monic `factor` in `self` (0 if coprime).
    pub fn multiplicity_of(&self, factor: &Polynomial) -> usize {
        if self.is_zero() || factor.is_constant() {
            return 0;
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            match cur.divrem(factor) {
                Ok((q, r)) if r.is_zero() => {
                    k += 1;
                    cur = q;
                }
                _ => return k,
            }
        }
    }

    /// Squarefree part `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("squarefree part of zero".into()));
        }
        if self.is_constant() {
            return Ok(Polynomial::one());
        }
        let g = poly_gcd(self, &self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_constant() {
            return Ok(true);
        }
        Ok(poly_gcd(self, &self.derivative())?.is_constant())
    }

    /// Clear denominators and integer content: primitive integer coefficient
    /// vector with positive leading coefficient.
    pub(crate) fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut v: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &v {
            content = content.gcd(c);
        }
        if v.last().map_or(false, |c| c.sign() == Sign::Minus) {
            content = -content;
        }
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
        v
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    /// Human form with variable `x`, descending powers: `3*x^4 - 4*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pretty(self, "x"))
    }
}

/// Pretty-print with a chosen variable name. Output re-parses to the same
/// coefficient list.
pub fn pretty(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in p
        .coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .enumerate()
    {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit_coeff = mag.is_one() && i > 0;
        if !unit_coeff {
            out.push_str(&mag.to_string());
        }
        if i > 0 {
            if !unit_coeff {
                out.push('*');
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(v)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(v)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + a * b;
            }
        }
        Polynomial::new(v)
    }
}

// ---------------------------------------------------------------------------
// gcd by primitive pseudo-remainder sequences over Z
// ---------------------------------------------------------------------------

fn int_deg(v: &[BigInt]) -> usize {
    v.len().saturating_sub(1)
}

/// Pseudo-remainder of primitive integer polynomials, `deg a >= deg b >= 0`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = int_deg(b);
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        if r.last().map_or(true, |c| c.is_zero()) {
            r.pop();
            continue;
        }
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for i in 0..=db {
            r[shift + i] -= &lr * &b[i];
        }
        r.pop();
    }
    while r.last().map_or(false, |c| c.is_zero()) {
        r.pop();
    }
    r
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().sign() == Sign::Minus {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

/// Monic greatest common divisor over Q, via a primitive PRS over Z so that
/// intermediate coefficients stay under control.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let mut u = a.primitive_int();
    let mut v = b.primitive_int();
    if int_deg(&u) < int_deg(&v) {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        if int_deg(&v) == 0 {
            return Ok(Polynomial::one());
        }
        let r = int_primitive(pseudo_rem(&u, &v));
        u = v;
        v = r;
    }
    Ok(Polynomial::new(u.into_iter().map(Rat::from_integer).collect()).monic())
}

// ---------------------------------------------------------------------------
// Yun squarefree decomposition (characteristic zero)
// ---------------------------------------------------------------------------

/// Yun decomposition: pairs `(e, S_e)` with `S_e` monic squarefree pairwise
/// coprime and `A = lc(A) * prod S_e^e`. Classes with constant factor are
/// omitted.
pub fn yun_decompose(a: &Polynomial) -> Result<Vec<(u32, Polynomial)>> {
    if a.is_zero() || a.is_constant() {
        return Err(Error::InvalidArgument(
            "squarefree decomposition needs a nonconstant polynomial".into(),
        ));
    }
    let am = a.monic();
    let da = am.derivative();
    let g = poly_gcd(&am, &da)?;
    let mut b = am.exact_div(&g)?;
    let c0 = da.exact_div(&g)?;
    let mut d = &c0 - &b.derivative();
    let mut out = Vec::new();
    let mut e = 1u32;
    while !b.is_constant() {
        let s = poly_gcd(&b, &d)?;
        if !s.is_constant() {
            out.push((e, s.clone()));
        }
        b = b.exact_div(&s)?;
        let c = d.exact_div(&s)?;
        d = &c - &b.derivative();
        e += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Resultant of A(x) against B(x) with Q[z] coefficients
// ---------------------------------------------------------------------------

/// Polynomial in `x` whose coefficients are polynomials in `z`, ascending by
/// the power of `x`. The only shapes the analysis needs are `z - P(x)` and
/// test constructions, so this stays deliberately minimal.
#[derive(Clone, Debug)]
pub struct BiPoly {
    xcoeffs: Vec<Polynomial>,
}

impl BiPoly {
    pub fn new(mut xcoeffs: Vec<Polynomial>) -> Self {
        while xcoeffs.last().map_or(false, |c| c.is_zero()) {
            xcoeffs.pop();
        }
        BiPoly { xcoeffs }
    }

    /// The bivariate polynomial `z - P(x)`.
    pub fn z_minus(p: &Polynomial) -> Self {
        let mut xcoeffs: Vec<Polynomial> = (0..=p.deg())
            .map(|i| Polynomial::constant(-p.coeff(i)))
            .collect();
        // constant-in-x coefficient picks up the z term
        let z_part = Polynomial::new(vec![-p.coeff(0), Rat::one()]);
        xcoeffs[0] = z_part;
        BiPoly::new(xcoeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.xcoeffs.is_empty()
    }

    pub fn deg_x(&self) -> usize {
        self.xcoeffs.len().saturating_sub(1)
    }
}

/// Fraction-free Bareiss determinant over the domain Q[z].
fn poly_det(mut m: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut sign = 1i32;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}

/// `Res_x(A, B)` as a polynomial in `z`, with the convention
/// `Res_x(A, B) = lc(A)^{deg_x B} * prod_{A(alpha)=0} B(alpha)` (roots with
/// multiplicity). Computed as a multiplication-matrix determinant over Q[z]
/// with fraction-free elimination, so every step is exact.
pub fn resultant(a: &Polynomial, b: &BiPoly) -> Result<Polynomial> {
    if a.is_zero() || a.is_constant() {
        return Err(Error::InvalidArgument(
            "resultant needs a nonconstant first argument".into(),
        ));
    }
    if b.is_zero() {
        return Err(Error::InvalidArgument(
            "resultant needs a nonzero second argument".into(),
        ));
    }
    let d = a.deg();
    let am = a.monic();
    // reduce B modulo monic A: Horner in x over Q[z]
    let mut rem: Vec<Polynomial> = vec![Polynomial::zero(); d];
    for c in b.xcoeffs.iter().rev() {
        rem = mul_by_x_mod(&rem, &am);
        rem[0] = &rem[0] + c;
    }
    // multiplication matrix of (B mod A) on the basis 1, x, ..., x^{d-1}
    let mut cols: Vec<Vec<Polynomial>> = Vec::with_capacity(d);
    let mut cur = rem;
    for _ in 0..d {
        cols.push(cur.clone());
        cur = mul_by_x_mod(&cur, &am);
    }
    let matrix: Vec<Vec<Polynomial>> = (0..d)
        .map(|i| (0..d).map(|j| cols[j][i].clone()).collect())
        .collect();
    let det = poly_det(matrix)?;
    let lc_pow = a.leading().pow(b.deg_x() as i32);
    Ok(det.scale(&lc_pow))
}

/// Multiply an element of Q[z][x]/(A) by x, A monic of degree `rem.len()`.
fn mul_by_x_mod(rem: &[Polynomial], am: &Polynomial) -> Vec<Polynomial> {
    let d = rem.len();
    let mut out = vec![Polynomial::zero(); d];
    let carry = rem[d - 1].clone();
    for i in 1..d {
        out[i] = rem[i - 1].clone();
    }
    if !carry.is_zero() {
        for (i, o) in out.iter_mut().enumerate() {
            *o = &*o - &carry.scale(&am.coeff(i));
        }
    }
    out
}

/// Monic polynomial in z whose roots are `P(alpha)` over the roots `alpha`
/// of `S` (with multiplicity): the critical-value polynomial builder.
pub fn value_poly(s: &Polynomial, p: &Polynomial) -> Result<Polynomial> {
    Ok(resultant(s, &BiPoly::z_minus(p))?.monic())
}

// ---------------------------------------------------------------------------
// Coprime part
// ---------------------------------------------------------------------------

/// Maximal-degree monic divisor `V` of `U` with `gcd(V, W) = 1`; the dropped
/// degree `deg U - deg V` counts roots of `U` (with multiplicity) that are
/// roots of `W`.
pub fn coprime_part(u: &Polynomial, w: &Polynomial) -> Result<Polynomial> {
    if u.is_zero() || w.is_zero() {
        return Err(Error::InvalidArgument("coprime_part of zero input".into()));
    }
    let mut v = u.monic();
    loop {
        let g = poly_gcd(&v, w)?;
        if g.is_constant() {
            return Ok(v);
        }
        v = v.exact_div(&g)?;
    }
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

/// All rational roots of a nonzero polynomial, without multiplicity.
///
/// Classic rational-root-theorem search; the constant and leading
/// coefficients are factored with trial division plus Pollard rho so that
/// the divisor enumeration is complete.
pub fn rational_roots(p: &Polynomial) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("rational_roots of zero".into()));
    }
    let mut v = p.primitive_int();
    let mut roots = Vec::new();
    // strip x | p
    let mut strip = 0;
    while v.first().map_or(false, |c| c.is_zero()) {
        v.remove(0);
        strip += 1;
    }
    if strip > 0 {
        roots.push(Rat::zero());
    }
    if v.len() <= 1 {
        return Ok(roots);
    }
    let a0 = v[0].magnitude().clone().into();
    let lc: BigInt = v.last().unwrap().magnitude().clone().into();
    let num_divs = divisors(&a0);
    let den_divs = divisors(&lc);
    let q = Polynomial::new(v.into_iter().map(Rat::from_integer).collect());
    for nd in &num_divs {
        for dd in &den_divs {
            for s in [1, -1] {
                let cand = Rat::new(nd * BigInt::from(s), dd.clone());
                if q.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// All positive divisors of |n|, n nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut facs: Vec<(BigInt, u32)> = Vec::new();
    let mut m: BigInt = n.magnitude().clone().into();
    for (p, e) in factorize(&m) {
        facs.push((p.clone(), e));
        for _ in 0..e {
            m /= &p;
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in facs {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return out;
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out
        .iter_mut()
        .find(|(q, _)| *q == p)
    {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1u32 << 20);
    while &d * &d <= m && d <= limit {
        while (&m % &d).is_zero() {
            push(d.clone(), &mut out);
            m /= &d;
        }
        d += 1;
    }
    if m > BigInt::one() {
        // what's left is either prime or needs rho
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if is_probable_prime(&c) {
                push(c, &mut out);
            } else {
                let f = pollard_rho(&c);
                stack.push(&c / &f);
                stack.push(f);
            }
        }
    }
    out
}

fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.modpow(exp, modulus)
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigInt::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut r = 0u32;
    while (&d % BigInt::from(2)).is_zero() {
        d /= BigInt::from(2);
        r += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(&BigInt::from(a), &d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if (n % BigInt::from(2)).is_zero() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d == BigInt::one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}
