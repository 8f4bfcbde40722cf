//! Weil polynomials and the absolute simplicity decision.
//!
//! A Weil q-polynomial here is a monic f in Z[x] of even degree 2n whose
//! roots come in pairs multiplying to q; equivalently f satisfies
//! x^(2n) f(q/x) = q^n f(x). Each such f is the characteristic polynomial
//! of Frobenius of an isogeny class of n-dimensional abelian varieties over
//! F_q, and f determines the class. Every question about base extension of
//! the class turns into exact polynomial arithmetic on f:
//!
//! * extending the field from F_q to F_(q^d) replaces the Frobenius roots by
//!   their d-th powers, so the extended class has [`power_charpoly`] of f;
//! * the class is simple exactly when f is irreducible, and it stays simple
//!   over every extension exactly when none of the power characteristic
//!   polynomials acquires repeated roots; only finitely many exponents d can
//!   ever be guilty, which is what makes [`absolute_simplicity`] a finite
//!   decision.
//!
//! The real companion g, with f(x) = x^n g(x + q/x), tracks the totally real
//! subfield generated by pi + q/pi and is the natural search space when
//! building Weil polynomials from scratch.

use crate::intpoly::{
    is_irreducible_over_rationals, power_charpoly, sturm_count, Endpoint, IntPoly,
};
use crate::modpoly::ResiduePoly;
use crate::numth::{first_primes, PrimePower};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// A validated Weil polynomial: monic, even degree 2n >= 2, and satisfying
/// the functional equation for its prime power q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilPoly {
    poly: IntPoly,
    q: PrimePower,
    dim: usize,
}

impl WeilPoly {
    /// Validate and wrap a polynomial. Fails with [`Error::NotMonic`],
    /// [`Error::InvalidDegree`] or [`Error::FunctionalEquationViolated`].
    pub fn new(poly: IntPoly, q: PrimePower) -> Result<WeilPoly> {
        let g = weil_to_real(&poly, q)?;
        let dim = g.deg();
        Ok(WeilPoly { poly, q, dim })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    /// The dimension n of the abelian varieties in the class (half the
    /// degree).
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Coefficient of x^n, whose interaction with q decides ordinarity.
    pub fn middle_coeff(&self) -> BigInt {
        self.poly.coeff(self.dim)
    }

    /// An isogeny class is ordinary exactly when the middle coefficient of
    /// its Weil polynomial is coprime to q.
    pub fn is_ordinary(&self) -> bool {
        self.middle_coeff().gcd(&BigInt::from(self.q.q())).is_one()
    }

    /// The real companion g with f(x) = x^n g(x + q/x).
    pub fn real_companion(&self) -> RealCompanion {
        let poly = weil_to_real(&self.poly, self.q).expect("validated at construction");
        RealCompanion { poly, q: self.q }
    }
}

/// A monic integer polynomial g paired with a prime power q, representing
/// the candidate x^n g(x + q/x). It is the Weil polynomial of an isogeny
/// class exactly when g is totally real with all roots in [-2 sqrt q, 2 sqrt q],
/// which [`RealCompanion::is_real_weil`] decides exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCompanion {
    poly: IntPoly,
    q: PrimePower,
}

impl RealCompanion {
    /// Wrap a monic polynomial of degree >= 1.
    pub fn new(poly: IntPoly, q: PrimePower) -> Result<RealCompanion> {
        match poly.degree() {
            None | Some(0) => {
                return Err(Error::InvalidDegree(
                    poly.degree().unwrap_or(0),
                    "real companion needs degree >= 1",
                ))
            }
            Some(_) => {}
        }
        if !poly.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(RealCompanion { poly, q })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn dimension(&self) -> usize {
        self.poly.deg()
    }

    /// The associated degree-2n polynomial x^n g(x + q/x).
    pub fn to_weil(&self) -> IntPoly {
        real_to_weil(&self.poly, self.q).expect("validated at construction")
    }

    /// All roots real and inside the closed interval [-2 sqrt q, 2 sqrt q]?
    pub fn is_real_weil(&self) -> bool {
        real_weil_check(&self.poly, self.q, false)
    }

    /// All roots real and inside the open interval (-2 sqrt q, 2 sqrt q)?
    pub fn is_real_weil_strict(&self) -> bool {
        real_weil_check(&self.poly, self.q, true)
    }

    /// g(0) is, up to sign, the middle coefficient of the associated Weil
    /// polynomial, so ordinarity reads off the constant term.
    pub fn is_ordinary(&self) -> bool {
        self.poly
            .constant()
            .gcd(&BigInt::from(self.q.q()))
            .is_one()
    }
}

/// Expand f(x) = x^n g(x + q/x) for monic g of degree n >= 1.
pub fn real_to_weil(g: &IntPoly, q: PrimePower) -> Result<IntPoly> {
    let n = match g.degree() {
        None | Some(0) => {
            return Err(Error::InvalidDegree(
                g.degree().unwrap_or(0),
                "expansion needs degree >= 1",
            ))
        }
        Some(n) => n,
    };
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let x2q = IntPoly::new(vec![BigInt::from(q.q()), BigInt::zero(), BigInt::one()]);
    let mut f = IntPoly::zero();
    let mut pow = IntPoly::one();
    for j in 0..=n {
        // g_j x^j contributes g_j x^(n-j) (x^2 + q)^j
        f = &f + &pow.scale(&g.coeff(j)).shift_up(n - j);
        if j < n {
            pow = &pow * &x2q;
        }
    }
    Ok(f)
}

/// Invert [`real_to_weil`]: recover g from a polynomial satisfying the
/// functional equation, rejecting everything else.
pub fn weil_to_real(f: &IntPoly, q: PrimePower) -> Result<IntPoly> {
    let deg = match f.degree() {
        None => return Err(Error::InvalidDegree(0, "expected even degree >= 2")),
        Some(d) => d,
    };
    if deg == 0 || deg % 2 != 0 {
        return Err(Error::InvalidDegree(deg, "expected even degree >= 2"));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = deg / 2;
    let x2q = IntPoly::new(vec![BigInt::from(q.q()), BigInt::zero(), BigInt::one()]);
    let mut pows = vec![IntPoly::one()];
    for j in 1..=n {
        let next = &pows[j - 1] * &x2q;
        pows.push(next);
    }
    // x^(n-j) (x^2+q)^j is monic of degree n+j, so the coefficients of g
    // peel off from the top
    let mut r = f.clone();
    let mut g = vec![BigInt::zero(); n + 1];
    for j in (0..=n).rev() {
        let c = r.coeff(n + j);
        if !c.is_zero() {
            r = &r - &pows[j].scale(&c).shift_up(n - j);
        }
        g[j] = c;
    }
    if !r.is_zero() {
        return Err(Error::FunctionalEquationViolated {
            degree: deg,
            q: q.q(),
        });
    }
    Ok(IntPoly::new(g))
}

/// Is the nonzero polynomial g totally real with every root of absolute
/// value at most 2 sqrt q?
pub fn is_real_weil(g: &IntPoly, q: PrimePower) -> bool {
    real_weil_check(g, q, false)
}

/// As [`is_real_weil`], but with the interval endpoints excluded: no root
/// may sit exactly at -2 sqrt q or 2 sqrt q.
pub fn is_real_weil_strict(g: &IntPoly, q: PrimePower) -> bool {
    real_weil_check(g, q, true)
}

fn real_weil_check(g: &IntPoly, q: PrimePower, strict: bool) -> bool {
    let n = g.degree().expect("nonzero polynomial required");
    assert!(n >= 1, "constant polynomials have no root condition");
    // totally real: the squarefree part has as many real roots as its degree
    let sf = g.squarefree_part();
    let real_roots = sturm_count(&sf, &Endpoint::NegInf, &Endpoint::PosInf)
        .expect("squarefree part is squarefree");
    if real_roots != sf.deg() {
        return false;
    }
    // squared roots: G(x^2) = (-1)^n g(x) g(-x), so the roots of G are
    // exactly the squares of the roots of g, and the bound becomes: no root
    // of G beyond 4q
    let mut h = g * &g.substitute_neg_x();
    if n % 2 == 1 {
        h = -&h;
    }
    let mut even = Vec::with_capacity(n + 1);
    for (i, c) in h.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            debug_assert!(c.is_zero(), "g(x) g(-x) must be even");
        }
    }
    let squares = IntPoly::new(even);
    let four_q = BigRational::from_integer(BigInt::from(4u64) * BigInt::from(q.q()));
    if strict && squares.sign_at_rational(&four_q) == 0 {
        return false;
    }
    let ssf = squares.squarefree_part();
    let beyond = sturm_count(&ssf, &Endpoint::Finite(four_q), &Endpoint::PosInf)
        .expect("squarefree part is squarefree");
    beyond == 0
}

/// The exponents d at which a degree-2n isogeny class could first lose
/// simplicity: d > 1 with d dividing 2n, together with every d whose totient
/// divides 2n. Ascending, deduplicated, complete (any first failure happens
/// at one of these).
pub fn candidate_exponents(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let two_n = 2 * n;
    // phi(d) >= sqrt(d/2), so phi(d) | 2n forces d <= 8n^2
    let mut out = Vec::new();
    for d in 2..=8 * n * n {
        if two_n % d == 0 || two_n % crate::numth::euler_phi(d as u64) as usize == 0 {
            out.push(d);
        }
    }
    out
}

/// Degree of the field generated by the d-th power of a root of f, i.e. the
/// number of distinct d-th powers of roots.
///
/// For irreducible f this is the degree over Q of Q(pi^d), the center of
/// the endomorphism algebra after extending the base field by d.
pub fn subfield_degree(f: &WeilPoly, d: usize) -> usize {
    let fd = power_charpoly(&f.poly, d);
    let n2 = fd.deg();
    // a squarefree reduction mod any prime certifies fd squarefree over Z,
    // which is the common case and avoids a big-integer gcd
    for p in first_primes(15) {
        let fp = ResiduePoly::from_int_poly(&fd, p);
        if fp.degree() == Some(n2) && fp.gcd(&fp.derivative()).degree() == Some(0) {
            return n2;
        }
    }
    fd.squarefree_part().deg()
}

/// Outcome of the absolute simplicity decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum SimplicityVerdict {
    /// The class is simple over every finite extension of the base field.
    #[serde(rename = "abs_simple")]
    AbsolutelySimple,
    /// The class is ordinary and becomes non-simple over the extension of
    /// the stated degree (and over no smaller one).
    #[serde(rename = "splits")]
    SplitsAtDegree { degree: usize },
    /// The class is not ordinary and the Frobenius field shrinks at the
    /// stated degree; for non-ordinary classes that alone does not decide
    /// splitting.
    #[serde(rename = "inconclusive")]
    Inconclusive { degree: usize },
}

impl std::fmt::Display for SimplicityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplicityVerdict::AbsolutelySimple => write!(f, "absolutely simple"),
            SimplicityVerdict::SplitsAtDegree { degree } => {
                write!(f, "splits over the degree-{degree} extension")
            }
            SimplicityVerdict::Inconclusive { degree } => {
                write!(f, "inconclusive (Frobenius field shrinks at degree {degree})")
            }
        }
    }
}

/// Decide whether the isogeny class of f stays simple over every finite
/// extension.
///
/// Requires f irreducible (the class must be simple to begin with);
/// otherwise [`Error::NotIrreducible`].
///
/// When every candidate exponent keeps the full Frobenius field the class
/// is absolutely simple, ordinary or not. At the first shrinking exponent
/// the verdict depends on ordinarity: an ordinary class genuinely splits
/// there, while a non-ordinary class may or may not.
pub fn absolute_simplicity(f: &WeilPoly) -> Result<SimplicityVerdict> {
    if !is_irreducible_over_rationals(&f.poly) {
        return Err(Error::NotIrreducible);
    }
    let n2 = 2 * f.dim;
    for d in candidate_exponents(f.dim) {
        if subfield_degree(f, d) < n2 {
            return Ok(if f.is_ordinary() {
                SimplicityVerdict::SplitsAtDegree { degree: d }
            } else {
                SimplicityVerdict::Inconclusive { degree: d }
            });
        }
    }
    Ok(SimplicityVerdict::AbsolutelySimple)
}
