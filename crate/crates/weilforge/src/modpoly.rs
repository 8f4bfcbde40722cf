//! Polynomials over Z/m, with the real machinery living over prime fields.
//!
//! Composite moduli only support construction, reduction to prime
//! components, and evaluation; everything structural (gcd, factorization
//! patterns, irreducibility) requires a prime modulus and is fully
//! deterministic: distinct-degree splitting by Frobenius powers, and an
//! equal-degree refinement that scans candidate splitting polynomials in a
//! fixed order instead of sampling them.

use crate::intpoly::IntPoly;
use crate::numth::{is_prime_u64, moebius};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A polynomial over Z/m, coefficients ascending and reduced, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

/// The multiset of degrees of the irreducible factors of a polynomial over
/// a prime field, multiplicity included: x^2 (x+1) over F_2 has pattern
/// [1, 1, 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPattern {
    degrees: Vec<usize>,
}

impl FactorPattern {
    fn new(mut degrees: Vec<usize>) -> FactorPattern {
        degrees.sort_unstable();
        FactorPattern { degrees }
    }

    /// Sorted degrees with multiplicity.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Degree -> count map.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut map = BTreeMap::new();
        for &d in &self.degrees {
            *map.entry(d).or_insert(0) += 1;
        }
        map
    }

    /// True when the polynomial is irreducible of degree n.
    pub fn is_irreducible_of_degree(&self, n: usize) -> bool {
        self.degrees == [n]
    }

    /// True when the pattern is one linear factor times one irreducible of
    /// degree n - 1 (for n = 2: two linear factors).
    pub fn is_linear_times_irreducible(&self, n: usize) -> bool {
        n >= 2 && self.degrees == [1, n - 1]
    }

    /// Sum of all degrees (the total degree of the factored polynomial).
    pub fn total_degree(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl ResiduePoly {
    /// Build from ascending coefficients, reducing mod m. m must be >= 2.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> ResiduePoly {
        assert!(modulus >= 2, "modulus must be at least 2");
        let mut c: Vec<u64> = coeffs.into_iter().map(|v| v % modulus).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        ResiduePoly { modulus, coeffs: c }
    }

    /// Reduce an integer polynomial mod m.
    pub fn from_int_poly(f: &IntPoly, modulus: u64) -> ResiduePoly {
        let m = BigInt::from(modulus);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&m);
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        ResiduePoly::new(modulus, coeffs)
    }

    /// Lift back to Z[x] with coefficients in [0, m).
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Reduce to a smaller modulus d (d must divide m).
    pub fn reduce_mod(&self, d: u64) -> ResiduePoly {
        assert!(d >= 2 && self.modulus % d == 0, "new modulus must divide m");
        ResiduePoly::new(d, self.coeffs.clone())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// The constant polynomial 1 mod m.
    pub fn one(modulus: u64) -> ResiduePoly {
        ResiduePoly::new(modulus, vec![1])
    }

    /// The monomial x mod m.
    pub fn x(modulus: u64) -> ResiduePoly {
        ResiduePoly::new(modulus, vec![0, 1])
    }

    /// Evaluate at a point mod m.
    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus as u128;
        let xv = (x % self.modulus) as u128;
        let mut acc = 0u128;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * xv + c as u128) % m;
        }
        acc as u64
    }

    fn same_modulus(&self, other: &ResiduePoly) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }

    pub fn add(&self, other: &ResiduePoly) -> ResiduePoly {
        self.same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let m = self.modulus;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + other.coeff(i)) % m);
        }
        ResiduePoly::new(m, out)
    }

    pub fn sub(&self, other: &ResiduePoly) -> ResiduePoly {
        self.same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let m = self.modulus;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + m - other.coeff(i)) % m);
        }
        ResiduePoly::new(m, out)
    }

    pub fn mul(&self, other: &ResiduePoly) -> ResiduePoly {
        self.same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return ResiduePoly::new(self.modulus, vec![]);
        }
        let m = self.modulus as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % m;
            }
        }
        ResiduePoly::new(self.modulus, out.into_iter().map(|v| v as u64).collect())
    }

    pub fn scale(&self, c: u64) -> ResiduePoly {
        let m = self.modulus as u128;
        let cv = (c as u128) % m;
        ResiduePoly::new(
            self.modulus,
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * cv) % m) as u64)
                .collect(),
        )
    }

    /// Formal derivative.
    pub fn derivative(&self) -> ResiduePoly {
        if self.coeffs.len() <= 1 {
            return ResiduePoly::new(self.modulus, vec![]);
        }
        let m = self.modulus as u128;
        ResiduePoly::new(
            self.modulus,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| ((c as u128 * ((i as u128 + 1) % m)) % m) as u64)
                .collect(),
        )
    }

    /// Quotient and remainder; requires a prime modulus (or at least an
    /// invertible leading coefficient in the divisor).
    pub fn div_rem(&self, rhs: &ResiduePoly) -> (ResiduePoly, ResiduePoly) {
        self.same_modulus(rhs);
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let m = self.modulus;
        let dr = rhs.deg();
        let inv = inv_mod(rhs.leading(), m).expect("leading coefficient not invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dr {
            return (ResiduePoly::new(m, vec![]), self.clone());
        }
        let mut quot = vec![0u64; rem.len().saturating_sub(dr)];
        let mm = m as u128;
        while rem.len() > dr {
            let lead = *rem.last().expect("nonempty");
            let k = rem.len() - 1 - dr;
            if lead != 0 {
                let c = ((lead as u128 * inv as u128) % mm) as u64;
                quot[k] = c;
                for (i, &b) in rhs.coeffs.iter().enumerate() {
                    let sub = (c as u128 * b as u128) % mm;
                    rem[k + i] = ((rem[k + i] as u128 + mm - sub) % mm) as u64;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= dr {
                break;
            }
        }
        (ResiduePoly::new(m, quot), ResiduePoly::new(m, rem))
    }

    /// Monic gcd over a prime field.
    pub fn gcd(&self, other: &ResiduePoly) -> ResiduePoly {
        self.same_modulus(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Scale to leading coefficient 1 (prime modulus).
    pub fn make_monic(&self) -> ResiduePoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.modulus).expect("leading coefficient not invertible");
        self.scale(inv)
    }

    /// self^e mod modpoly, over a prime field.
    pub fn pow_mod(&self, e: &BigUint, modpoly: &ResiduePoly) -> ResiduePoly {
        self.same_modulus(modpoly);
        let mut result = ResiduePoly::one(self.modulus);
        let base = self.div_rem(modpoly).1;
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).div_rem(modpoly).1;
            if e.bit(i) {
                result = result.mul(&base).div_rem(modpoly).1;
            }
        }
        result
    }
}

/// Extended Euclid over a prime field: returns (g, s, t) with
/// s * a + t * b = g and g the monic gcd.
pub(crate) fn ext_gcd(a: &ResiduePoly, b: &ResiduePoly) -> (ResiduePoly, ResiduePoly, ResiduePoly) {
    let m = a.modulus();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = ResiduePoly::one(m);
    let mut s1 = ResiduePoly::new(m, vec![]);
    let mut t0 = ResiduePoly::new(m, vec![]);
    let mut t1 = ResiduePoly::one(m);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = inv_mod(r0.leading(), m).expect("prime modulus");
    (r0.scale(inv), s0.scale(inv), t0.scale(inv))
}

/// Modular inverse by extended Euclid.
fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotAPrimePower(format!("{p} (prime modulus required)")))
    }
}

/// Squarefree decomposition over F_p: pairs (factor, multiplicity) with the
/// factors monic, squarefree, pairwise coprime, and product equal to the
/// monic associate of f.
pub fn squarefree_decomposition(f: &ResiduePoly) -> Result<Vec<(ResiduePoly, usize)>> {
    let p = f.modulus();
    require_prime(p)?;
    let f = f.make_monic();
    let mut out = Vec::new();
    sqf_rec(&f, 1, &mut out);
    out.sort_by_key(|(poly, m)| (*m, poly.deg(), poly.coeffs().to_vec()));
    Ok(out)
}

fn sqf_rec(f: &ResiduePoly, outer: usize, out: &mut Vec<(ResiduePoly, usize)>) {
    let p = f.modulus();
    if f.degree() == Some(0) || f.is_zero() {
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = (pth_root g)^p over F_p
        let root = pth_root(f);
        sqf_rec(&root, outer * p as usize, out);
        return;
    }
    let mut d = f.gcd(&deriv);
    let mut w = f.div_rem(&d).0;
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd(&d);
        let z = w.div_rem(&y).0;
        if z.degree().map_or(false, |dz| dz > 0) {
            out.push((z, outer * i));
        }
        w = y;
        d = d.div_rem(&w).0;
        i += 1;
    }
    if d.degree().map_or(false, |dd| dd > 0) {
        let root = pth_root(&d);
        sqf_rec(&root, outer * p as usize, out);
    }
}

/// For f with zero derivative over F_p, the g with g^p = f.
fn pth_root(f: &ResiduePoly) -> ResiduePoly {
    let p = f.modulus() as usize;
    let mut coeffs = Vec::new();
    let mut i = 0usize;
    while i < f.coeffs().len() {
        coeffs.push(f.coeff(i));
        i += p;
    }
    ResiduePoly::new(f.modulus(), coeffs)
}

/// Distinct-degree blocks of a squarefree monic polynomial over F_p:
/// pairs (d, product of all irreducible factors of degree d), ascending d.
fn distinct_degree_blocks(u: &ResiduePoly) -> Vec<(usize, ResiduePoly)> {
    let p = u.modulus();
    let pe = BigUint::from(p);
    let mut u = u.clone();
    let mut blocks = Vec::new();
    let mut h = ResiduePoly::x(p);
    let mut k = 0usize;
    while u.degree().map_or(false, |d| d >= 2 * (k + 1)) {
        k += 1;
        h = h.pow_mod(&pe, &u);
        let diff = h.sub(&ResiduePoly::x(p));
        let g = diff.gcd(&u);
        if g.degree().map_or(false, |d| d > 0) {
            u = u.div_rem(&g).0;
            h = h.div_rem(&u).1;
            blocks.push((k, g));
        }
    }
    if u.degree().map_or(false, |d| d > 0) {
        blocks.push((u.deg(), u));
    }
    blocks
}

/// Factor-degree pattern of a nonzero polynomial over a prime field.
pub fn factor_degree_pattern(f: &ResiduePoly) -> Result<FactorPattern> {
    require_prime(f.modulus())?;
    if f.is_zero() {
        return Err(Error::InvalidDegree(0, "pattern of the zero polynomial"));
    }
    let mut degrees = Vec::new();
    for (factor, mult) in squarefree_decomposition(f)? {
        for (d, block) in distinct_degree_blocks(&factor) {
            let count = block.deg() / d;
            for _ in 0..count * mult {
                degrees.push(d);
            }
        }
    }
    Ok(FactorPattern::new(degrees))
}

/// Irreducibility over a prime field.
pub fn is_irreducible(f: &ResiduePoly) -> Result<bool> {
    require_prime(f.modulus())?;
    match f.degree() {
        None | Some(0) => Ok(false),
        Some(1) => Ok(true),
        Some(n) => {
            let deriv = f.derivative();
            if deriv.is_zero() {
                return Ok(false); // p-th power
            }
            if f.gcd(&deriv).degree() != Some(0) {
                return Ok(false);
            }
            let blocks = distinct_degree_blocks(&f.make_monic());
            Ok(blocks.len() == 1 && blocks[0].0 == n)
        }
    }
}

/// Full factorization of a squarefree monic polynomial over F_p into monic
/// irreducibles, deterministic. Used by the exact irreducibility fallback
/// over the rationals.
pub(crate) fn factor_squarefree_monic(f: &ResiduePoly) -> Result<Vec<ResiduePoly>> {
    require_prime(f.modulus())?;
    assert!(f.is_monic(), "factor_squarefree_monic needs a monic input");
    let mut out = Vec::new();
    for (d, block) in distinct_degree_blocks(f) {
        equal_degree_split(&block, d, &mut out);
    }
    out.sort_by_key(|g| (g.deg(), g.coeffs().to_vec()));
    Ok(out)
}

/// Split a product of distinct irreducibles, all of degree d, scanning
/// candidate separating polynomials in a fixed order. A separating candidate
/// of degree below 2d always exists, so the scan terminates.
fn equal_degree_split(h: &ResiduePoly, d: usize, out: &mut Vec<ResiduePoly>) {
    let n = h.deg();
    if n == d {
        out.push(h.clone());
        return;
    }
    let p = h.modulus();
    let mut counter = 1u64;
    loop {
        let r = poly_from_counter(p, counter);
        counter += 1;
        if r.degree().map_or(true, |dr| dr == 0) {
            continue;
        }
        let g = if p == 2 {
            // trace map r + r^2 + ... + r^(2^(d-1)) mod h
            let mut t = r.div_rem(h).1;
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).div_rem(h).1;
                acc = acc.add(&t);
            }
            acc.gcd(h)
        } else {
            // r^((p^d - 1)/2) - 1 mod h
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let t = r.pow_mod(&e, h);
            t.sub(&ResiduePoly::one(p)).gcd(h)
        };
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                let rest = h.div_rem(&g).0;
                equal_degree_split(&g, d, out);
                equal_degree_split(&rest, d, out);
                return;
            }
        }
    }
}

/// The polynomial whose coefficient vector is the base-p digit expansion of
/// the counter, least significant digit as the constant term.
fn poly_from_counter(p: u64, mut counter: u64) -> ResiduePoly {
    let mut coeffs = Vec::new();
    while counter > 0 {
        coeffs.push(counter % p);
        counter /= p;
    }
    ResiduePoly::new(p, coeffs)
}

/// Number of monic irreducible polynomials of degree n over F_p:
/// (1/n) sum over d | n of mu(n/d) p^d.
pub fn count_irreducible(p: u64, n: usize) -> Result<BigUint> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidDegree(0, "count needs degree >= 1"));
    }
    let mut sum = BigInt::zero();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = moebius((n / d) as u64);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(p).pow(d as u32);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(n as u64));
    assert!(r.is_zero(), "necklace count must divide evenly");
    assert!(!q.is_negative());
    Ok(q.to_biguint().expect("nonnegative"))
}

/// Number of monic degree-n polynomials over F_p that factor as one linear
/// factor times one irreducible of degree n - 1.
///
/// For n >= 3 the two factor shapes cannot coincide, so the count is
/// p * (number of irreducibles of degree n - 1). The case n = 2 counts
/// products of two linear factors, which is settled by exhaustive
/// enumeration; p is capped there to keep the enumeration honest.
pub fn count_linear_times_irreducible(p: u64, n: usize) -> Result<BigUint> {
    require_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidDegree(n, "count needs degree >= 2"));
    }
    if n == 2 {
        if p > 3163 {
            return Err(Error::TooLarge(format!(
                "n = 2 count is enumerated; p = {p} gives p^2 > 10^7 cases"
            )));
        }
        let mut count: u64 = 0;
        for c1 in 0..p {
            for c0 in 0..p {
                let f = ResiduePoly::new(p, vec![c0, c1, 1]);
                if factor_degree_pattern(&f)?.is_linear_times_irreducible(2) {
                    count += 1;
                }
            }
        }
        return Ok(BigUint::from(count));
    }
    Ok(BigUint::from(p) * count_irreducible(p, n - 1)?)
}

/// Iterate all monic degree-n polynomials over Z/m in lexicographic order of
/// the (constant-first) coefficient vector.
pub fn monic_polys(modulus: u64, n: usize) -> impl Iterator<Item = ResiduePoly> {
    let total = (modulus as u128).checked_pow(n as u32).expect("space too large");
    (0..total).map(move |idx| {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut v = idx;
        for _ in 0..n {
            coeffs.push((v % modulus as u128) as u64);
            v /= modulus as u128;
        }
        coeffs.push(1);
        ResiduePoly::new(modulus, coeffs)
    })
}
