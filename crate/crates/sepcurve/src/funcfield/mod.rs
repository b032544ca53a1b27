//! Genus-0 function-field harness over Q(t).
//!
//! Places of Q(t) are monic squarefree polynomials (each of degree d
//! standing for d geometric points with identical valuations) plus the
//! point at infinity. All the global sums the height machinery needs are
//! therefore finite exact sums over a coprime squarefree basis refined
//! from the multiplicity classes of the functions involved — no splitting
//! field ever enters.

pub mod identities;
pub mod witness;

pub use identities::{verify_solution_identities, IdentityReport, SolutionPair};
pub use witness::{generate_test_solution, witness, WitnessOutcome};

use crate::error::{Error, Result};
use crate::ratpoly::{poly_gcd, rat, yun_decompose, Polynomial, Rat};

/// A reduced rational function over Q: coprime numerator/denominator,
/// monic denominator, zero represented as 0/1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading();
        let num = num.scale(&(rat(1) / &lead));
        let den = den.scale(&(rat(1) / lead));
        Ok(RationalFunction { num, den })
    }

    /// Constructor for quotients already known to be in lowest terms;
    /// only normalizes the denominator to be monic.
    fn new_coprime(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        let lead = den.leading();
        RationalFunction {
            num: num.scale(&(rat(1) / &lead)),
            den: den.scale(&(rat(1) / lead)),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The identity function t.
    pub fn t() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg numerator, deg denominator): the number of poles counted
    /// with multiplicity and degree.
    pub fn height(&self) -> u64 {
        self.num.deg().max(self.den.deg()) as u64
    }

    pub fn derivative(&self) -> RationalFunction {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        // den is nonzero, so this cannot fail
        RationalFunction::new(num, den).expect("derivative of reduced function")
    }

    /// Value at a rational point; None at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d == rat(0) {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", crate::ratpoly::pretty(&self.num, "t"))
        } else {
            write!(
                f,
                "({})/({})",
                crate::ratpoly::pretty(&self.num, "t"),
                crate::ratpoly::pretty(&self.den, "t")
            )
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Evaluates the polynomial `p` at the rational function `f` by Horner.
/// Writing f = N/D, this accumulates the numerator of
/// p(N/D) = (sum c_j N^j D^(n-j)) / D^n as a polynomial, so the quotient is
/// reduced exactly once at the end.
pub fn apply_poly(p: &Polynomial, f: &RationalFunction) -> RationalFunction {
    let (num, den) = apply_poly_parts(p, f);
    if num.is_zero() {
        return RationalFunction::zero();
    }
    // With f = N/D reduced and deg p = n, any common factor of the
    // accumulated numerator and D^n would divide lc(p) * N^n, which is
    // coprime to D; the quotient is already in lowest terms.
    RationalFunction::new_coprime(num, den)
}

/// Unreduced numerator and denominator of p(f); the denominator is
/// den(f)^deg p. Lets callers compare two evaluations by cross
/// multiplication without paying for a large gcd reduction.
pub(crate) fn apply_poly_parts(p: &Polynomial, f: &RationalFunction) -> (Polynomial, Polynomial) {
    let n = match p.degree() {
        Some(n) => n,
        None => return (Polynomial::constant(p.coeff(0)), Polynomial::one()),
    };
    let num = f.numerator();
    let den = f.denominator();
    let mut acc = Polynomial::constant(p.coeff(n));
    let mut dpow = Polynomial::one();
    for j in (0..n).rev() {
        dpow = &dpow * den;
        acc = &(&acc * num) + &dpow.scale(&p.coeff(j));
    }
    (acc, den.pow(n as u32))
}

/// Exact test for P(f) = Q(g) by cross multiplication of the unreduced
/// evaluations.
pub fn is_solution(
    p: &Polynomial,
    q: &Polynomial,
    f: &RationalFunction,
    g: &RationalFunction,
) -> bool {
    let (n1, d1) = apply_poly_parts(p, f);
    let (n2, d2) = apply_poly_parts(q, g);
    &n1 * &d2 == &n2 * &d1
}

/// A place of Q(t): a monic squarefree polynomial carrying deg-many
/// geometric points with identical valuations, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(Polynomial),
    Infinity,
}

impl Place {
    /// Number of geometric points the place carries.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg(),
            Place::Infinity => 1,
        }
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

/// Normalized order of vanishing of `f` at `place`; negative at poles.
pub fn valuation(f: &RationalFunction, place: &Place) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "valuation of the zero function is undefined".into(),
        ));
    }
    match place {
        Place::Finite(pi) => {
            if pi.is_constant() {
                return Err(Error::InvalidArgument("constant place polynomial".into()));
            }
            Ok(f.num.multiplicity_of(pi) as i64 - f.den.multiplicity_of(pi) as i64)
        }
        Place::Infinity => Ok(f.den.deg() as i64 - f.num.deg() as i64),
    }
}

pub fn height(f: &RationalFunction) -> u64 {
    f.height()
}

/// Height of the projective point [f : g]: clear denominators, divide by
/// the gcd, take the max degree. Scaling-invariant.
pub fn pair_height(f: &RationalFunction, g: &RationalFunction) -> Result<u64> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidArgument(
            "pair height of (0, 0) is undefined".into(),
        ));
    }
    let a = &f.num * &g.den;
    let b = &g.num * &f.den;
    let d = poly_gcd(&a, &b)?;
    let a = a.exact_div(&d)?;
    let b = b.exact_div(&d)?;
    Ok(a.deg().max(b.deg()) as u64)
}

/// Valuation of the derivative of `f` taken with respect to a local
/// uniformizer at the place: d/dt at finite places (squarefree place
/// polynomials are uniformizers at each of their points), and the chain
/// rule through s = 1/t at infinity.
pub fn derivative_place_valuation(f: &RationalFunction, place: &Place) -> Result<i64> {
    if f.is_constant() {
        return Err(Error::InvalidArgument(
            "derivative valuation of a constant is undefined".into(),
        ));
    }
    let df = f.derivative();
    let v = valuation(&df, place)?;
    Ok(match place {
        Place::Finite(_) => v,
        Place::Infinity => v - 2,
    })
}

/// Splits `f` into a pairwise-coprime squarefree monic basis, refining the
/// existing elements so that every input is a product of basis elements.
fn insert_into_basis(basis: &mut Vec<Polynomial>, f: &Polynomial) -> Result<()> {
    let mut f = f.monic();
    let mut i = 0;
    while i < basis.len() && !f.is_constant() {
        let g = poly_gcd(&f, &basis[i])?;
        if !g.is_constant() {
            let rem = basis[i].exact_div(&g)?;
            f = f.exact_div(&g)?;
            basis[i] = g;
            if !rem.is_constant() {
                i += 1;
                basis.insert(i, rem.monic());
            }
        }
        i += 1;
    }
    if !f.is_constant() {
        basis.push(f);
    }
    Ok(())
}

/// Coprime squarefree basis refined from the multiplicity classes of all
/// the given polynomials: every input factors as a product of powers of
/// basis elements, so every input has a uniform multiplicity along each
/// element. This is what makes valuations well defined per basis place.
pub fn uniform_basis(polys: &[&Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis = Vec::new();
    for p in polys {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (_, class) in yun_decompose(p)? {
            insert_into_basis(&mut basis, &class)?;
        }
    }
    Ok(basis)
}

/// Coprime squarefree basis of the squarefree part of `target` alone,
/// refined until every element also has a uniform multiplicity in `target`
/// and in each polynomial of `others`. Unlike [`uniform_basis`], this never
/// takes gcds between two members of `others`, which keeps it cheap when
/// they are large and only the places dividing `target` matter.
pub fn uniform_basis_within(
    target: &Polynomial,
    others: &[&Polynomial],
) -> Result<Vec<Polynomial>> {
    if target.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let mut basis = vec![target.squarefree_part()?];
    for other in std::iter::once(&target).chain(others.iter()) {
        if other.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for s in &basis {
            next.extend(split_uniform(s, other)?);
        }
        basis = next;
    }
    Ok(basis)
}

/// Splits the monic squarefree `s` into pairwise coprime monic factors on
/// each of which every root has one common multiplicity in `f`: the factor
/// carrying multiplicity exactly k is g_k / g_{k+1} for the nested gcd
/// chain g_0 = s, g_{k+1} = gcd(g_k, f / (g_1 ... g_k)).
fn split_uniform(s: &Polynomial, f: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut cur = s.monic();
    let mut rest = f.clone();
    loop {
        let g = poly_gcd(&cur, &rest)?;
        let piece = cur.exact_div(&g)?;
        if !piece.is_constant() {
            out.push(piece.monic());
        }
        if g.is_constant() {
            break;
        }
        rest = rest.exact_div(&g)?;
        cur = g;
    }
    Ok(out)
}

/// All places where any of the given functions has a zero or pole,
/// including infinity, as a coprime squarefree basis.
pub fn support_places(fs: &[&RationalFunction]) -> Result<Vec<Place>> {
    let mut polys = Vec::new();
    for f in fs {
        polys.push(&f.num);
        polys.push(&f.den);
    }
    let mut places: Vec<Place> = uniform_basis(&polys)?
        .into_iter()
        .map(Place::Finite)
        .collect();
    places.push(Place::Infinity);
    Ok(places)
}
