//! Dense integer polynomials with exact arithmetic.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so `coeffs[i]` multiplies x^i and the zero polynomial is the empty
//! vector. All algorithms work over Z or Q exactly; nothing here rounds.

mod factor;
mod power;
mod sturm;

pub use factor::is_irreducible_over_rationals;
pub use power::{power_charpoly, power_sums};
pub use sturm::{integer_roots, sturm_count, Endpoint};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in Z[x], coefficients ascending, normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers, ascending.
    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant 1.
    pub fn one() -> IntPoly {
        IntPoly::from_i64(&[1])
    }

    /// The monomial x.
    pub fn x() -> IntPoly {
        IntPoly::from_i64(&[0, 1])
    }

    /// c * x^k.
    pub fn monomial(c: BigInt, k: usize) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient (zero polynomial gives 0).
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Constant term.
    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Substitute -x for x.
    pub fn substitute_neg_x(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Small integer power.
    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
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

    /// Pseudo-remainder r with lc(g)^(deg f - deg g + 1) * f = q*g + r, where
    /// the returned pair is (r, s) and s = +1 or -1 records the sign of the
    /// multiplier actually applied, so that s * r has the sign pattern of a
    /// positive-multiple remainder. Requires g nonzero and deg f >= deg g.
    pub fn pseudo_rem(&self, g: &IntPoly) -> (IntPoly, i32) {
        assert!(!g.is_zero(), "pseudo_rem by zero");
        let dg = g.deg();
        let lg = g.leading();
        let mut r = self.clone();
        let df = match r.degree() {
            Some(d) if d >= dg => d,
            _ => return (r, 1),
        };
        let total = (df - dg + 1) as u32;
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lead = r.leading();
            r = &r.scale(&lg) - &g.scale(&lead).shift_up(dr - dg);
            steps += 1;
        }
        // top up so the multiplier is exactly lc(g)^total
        for _ in steps..total {
            r = r.scale(&lg);
        }
        let sign = if lg.is_negative() && total % 2 == 1 {
            -1
        } else {
            1
        };
        (r, sign)
    }

    /// Exact quotient self / g, or None when g does not divide self over Q
    /// or the quotient is not integral.
    pub fn div_exact(&self, g: &IntPoly) -> Option<IntPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let df = self.deg();
        let dg = g.deg();
        if df < dg {
            return None;
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let lg = BigRational::from_integer(g.leading());
        let mut quot = vec![BigRational::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let c = rem[k + dg].clone() / lg.clone();
            if !c.is_zero() {
                for (i, gc) in g.coeffs.iter().enumerate() {
                    let sub = &c * BigRational::from_integer(gc.clone());
                    rem[k + i] -= sub;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quot.len());
        for c in quot {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IntPoly::new(out))
    }

    /// Primitive gcd with positive leading coefficient (primitive-PRS).
    pub fn gcd_poly(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return make_positive(b);
        }
        if b.is_zero() {
            return make_positive(a);
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let (r, _) = a.pseudo_rem(&b);
            if r.is_zero() {
                return make_positive(b.primitive_part());
            }
            if r.degree() == Some(0) {
                return IntPoly::one();
            }
            a = b;
            b = r.primitive_part();
            if a.deg() < b.deg() {
                std::mem::swap(&mut a, &mut b);
            }
        }
    }

    /// The product of the distinct irreducible factors: primitive, positive
    /// leading coefficient. Requires a nonzero polynomial.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero(), "squarefree part of zero");
        if self.deg() == 0 {
            return IntPoly::one();
        }
        let prim = self.primitive_part();
        let g = prim.gcd_poly(&prim.derivative());
        if g.degree() == Some(0) {
            return make_positive(prim);
        }
        let q = prim
            .div_exact(&g)
            .expect("gcd(f, f') divides a primitive f");
        make_positive(q.primitive_part())
    }

    /// True when gcd(self, self') is constant.
    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero());
        if self.deg() == 0 {
            return true;
        }
        self.gcd_poly(&self.derivative()).degree() == Some(0)
    }

    /// Sign of the value at a rational point, computed without fractions:
    /// returns -1, 0, or 1.
    pub fn sign_at_rational(&self, x: &BigRational) -> i32 {
        // sign(f(a/b)) = sign(sum c_i a^i b^(n-i)) for b > 0
        if self.is_zero() {
            return 0;
        }
        let a = x.numer();
        let b = x.denom(); // normalized positive
        let n = self.deg();
        let mut bpow = vec![BigInt::one()];
        for _ in 0..n {
            let last = bpow.last().expect("nonempty").clone();
            bpow.push(last * b);
        }
        let mut acc = BigInt::zero();
        let mut apow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &apow * &bpow[n - i];
            apow *= a;
        }
        sign_of(&acc)
    }

    /// Cauchy root bound: every complex root has absolute value below
    /// 1 + max |c_i / lc|, returned as an integer bound.
    pub fn root_bound(&self) -> BigInt {
        assert!(!self.is_zero());
        let lc = self.leading().abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c.abs() + &lc - BigInt::one()) / &lc; // ceil division
            if q > max {
                max = q;
            }
        }
        max + BigInt::one()
    }
}

/// Flip the sign so the leading coefficient is positive.
fn make_positive(p: IntPoly) -> IntPoly {
    if p.leading().is_negative() {
        -&p
    } else {
        p
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Resultant of two nonzero polynomials, as the determinant of the Sylvester
/// matrix, computed fraction-free (Bareiss).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    assert!(!f.is_zero() && !g.is_zero(), "resultant of zero");
    let m = f.deg();
    let n = g.deg();
    if m == 0 {
        return f.leading().pow(n as u32);
    }
    if n == 0 {
        return g.leading().pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}
