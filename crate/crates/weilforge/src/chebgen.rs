//! Building absolutely simple ordinary Weil polynomials in any dimension.
//!
//! The builder works in a shifted Chebyshev basis: T_i is monic of degree i,
//! congruent to x^i mod 2, and any combination T_n + sum of small multiples
//! of lower T_i keeps every root real and inside (-2 sqrt 2, 2 sqrt 2), by a
//! classical root-confinement inequality checked exactly here. Solving for
//! the multipliers by CRT pins the reductions of the combination mod 2 and
//! mod 3 to precomputed shapes (irreducible, respectively linear times
//! irreducible), which forces the expanded degree-2n polynomial
//! x^n g(x + q/x) to be irreducible with no extra symmetry, hence
//! absolutely simple. Dimensions 3 through 18 use built-in seed data;
//! beyond that a deterministic search finds the mod-2 and mod-3 shapes,
//! optionally cached on disk.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::Serializer;
use serde::Serialize;

use crate::error::Error;
use crate::intpoly::IntPoly;
use crate::modpoly::{self, ResiduePoly};
use crate::numth::{first_primes, PrimePower};
use crate::textio;
use crate::weilcore::{self, SimplicityVerdict, WeilPoly};
use crate::Result;

/// The scaled Chebyshev polynomial of degree i: T_1 = x, T_2 = x^2 - 4, and
/// T_{i+1} = x T_i - 2 T_{i-1}. The exported degree-zero element is the
/// constant 1, while the recurrence itself is seeded with the value 2 that
/// the underlying cosine identity assigns to degree zero; both conventions
/// are needed, one as a basis element and one to make T_2 come out right.
///
/// Every T_i is monic, satisfies T_i = x^i mod 2, and for i >= 2 has
/// -2i as its coefficient of x^{i-2}.
pub fn chebyshev_t(i: usize) -> IntPoly {
    chebyshev_basis(i).pop().expect("basis is nonempty")
}

/// T_0, T_1, ..., T_n as a vector indexed by degree (T_0 = 1 exported).
pub fn chebyshev_basis(n: usize) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(IntPoly::one());
    if n == 0 {
        return out;
    }
    let mut prev = IntPoly::from_i64(&[2]);
    let mut cur = IntPoly::x();
    out.push(cur.clone());
    let two = BigInt::from(2);
    for _ in 2..=n {
        let next = &(&IntPoly::x() * &cur) - &prev.scale(&two);
        prev = cur;
        cur = next;
        out.push(cur.clone());
    }
    out
}

/// An exact number u + v sqrt(2) with rational parts, closed under ring
/// arithmetic, with sign decided by squaring instead of approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdValue {
    u: BigRational,
    v: BigRational,
}

fn two_pow(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

impl SurdValue {
    pub fn new(u: BigRational, v: BigRational) -> SurdValue {
        SurdValue { u, v }
    }

    pub fn zero() -> SurdValue {
        SurdValue::new(BigRational::zero(), BigRational::zero())
    }

    pub fn from_rational(u: BigRational) -> SurdValue {
        SurdValue::new(u, BigRational::zero())
    }

    /// The rational part u.
    pub fn rational_part(&self) -> &BigRational {
        &self.u
    }

    /// The coefficient v of sqrt(2).
    pub fn sqrt2_part(&self) -> &BigRational {
        &self.v
    }

    /// 2^{k/2} for any integer k, also negative: even k gives a rational,
    /// odd k a rational multiple of sqrt(2).
    pub fn root2_power(k: i64) -> SurdValue {
        if k % 2 == 0 {
            SurdValue::new(two_pow(k / 2), BigRational::zero())
        } else {
            SurdValue::new(BigRational::zero(), two_pow((k - 1).div_euclid(2)))
        }
    }

    pub fn add(&self, other: &SurdValue) -> SurdValue {
        SurdValue::new(&self.u + &other.u, &self.v + &other.v)
    }

    pub fn sub(&self, other: &SurdValue) -> SurdValue {
        SurdValue::new(&self.u - &other.u, &self.v - &other.v)
    }

    pub fn mul(&self, other: &SurdValue) -> SurdValue {
        let two = BigRational::from(BigInt::from(2));
        SurdValue::new(
            &self.u * &other.u + &two * &self.v * &other.v,
            &self.u * &other.v + &self.v * &other.u,
        )
    }

    pub fn scale(&self, c: &BigRational) -> SurdValue {
        SurdValue::new(&self.u * c, &self.v * c)
    }

    /// Exact sign: -1, 0, or 1. Mixed-sign parts are resolved by comparing
    /// u^2 with 2 v^2, which can never tie for nonzero rationals.
    pub fn sign(&self) -> i8 {
        let su = rational_sign(&self.u);
        let sv = rational_sign(&self.v);
        if sv == 0 {
            return su;
        }
        if su == 0 {
            return sv;
        }
        if su == sv {
            return su;
        }
        let u2 = &self.u * &self.u;
        let v2 = BigRational::from(BigInt::from(2)) * &self.v * &self.v;
        match u2.cmp(&v2) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => unreachable!("sqrt(2) is irrational"),
        }
    }

    /// Orders the value against a rational, exactly.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let diff = SurdValue::new(&self.u - r, self.v.clone());
        match diff.sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact root-confinement test for basis weights a_7, ..., a_n (the slice
/// starts at index 7; the list must be nonempty, so n >= 7).
///
/// Returns true when
/// sum for i in 7..n of |a_i| / 2^{i/2}, with the final term halved,
/// is strictly below 1. When it holds, every root of
/// T_n + a_7 T_{n-7} + ... + a_n T_0 is real and lies strictly between
/// -2 sqrt 2 and 2 sqrt 2.
pub fn robinson_check(weights: &[i64]) -> bool {
    assert!(!weights.is_empty(), "weights list must start at a_7");
    let mut total = SurdValue::zero();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (t, &w) in weights.iter().enumerate() {
        let i = 7 + t as i64;
        let mut term = SurdValue::root2_power(-i).scale(&BigRational::from(BigInt::from(w.abs())));
        if t + 1 == weights.len() {
            term = term.scale(&half);
        }
        total = total.add(&term);
    }
    total.cmp_rational(&BigRational::one()) == Ordering::Less
}

/// Built-in totally real seeds for dimensions 3 through 9, ascending
/// coefficients. Each passes the full five-condition check in
/// [`verify_builtin_tables`].
const SEED_REAL: [(usize, &[i64]); 7] = [
    (3, &[1, -5, 0, 1]),
    (4, &[1, -1, -6, 0, 1]),
    (5, &[1, 20, 1, -10, 0, 1]),
    (6, &[-1, 1, 34, 0, -12, 0, 1]),
    (7, &[1, -57, -2, 56, 0, -14, 0, 1]),
    (8, &[1, 0, -129, 1, 81, 0, -16, 0, 1]),
    (9, &[1, 147, -9, -240, 1, 108, 0, -18, 0, 1]),
];

/// Built-in mod-2 targets for dimensions 10 through 18 (ascending bits).
const SEED_MOD2: [(usize, &[u64]); 9] = [
    (10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (12, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (13, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (14, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (16, &[1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (18, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

/// Built-in mod-3 targets for dimensions 10 through 18 (ascending digits).
const SEED_MOD3: [(usize, &[u64]); 9] = [
    (10, &[1, 1, 1, 0, 2, 0, 2, 0, 1, 0, 1]),
    (11, &[1, 0, 0, 0, 0, 2, 0, 2, 0, 2, 0, 1]),
    (12, &[1, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (13, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 1, 0, 1]),
    (14, &[1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 1]),
    (15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1]),
    (16, &[2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1, 0, 1]),
    (17, &[1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 2, 0, 1]),
    (18, &[2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

/// Source material for the builder at a given dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasePolynomials {
    /// A ready-made totally real polynomial, dimensions 3 through 9.
    Seed(IntPoly),
    /// Mod-2 and mod-3 shapes for the basis-weight solve, dimensions >= 10.
    ResiduePair { g2: ResiduePoly, g3: ResiduePoly },
}

/// Returns the building material for dimension n: a built-in seed for
/// n in [3, 9], a built-in residue pair for n in [10, 18], and a freshly
/// searched pair beyond that. Searches iterate the free low-order
/// coefficients in lexicographic order from all zeros (constant term varies
/// fastest) and return the first valid hit, so results are reproducible.
pub fn base_polynomials(n: usize) -> Result<BasePolynomials> {
    match n {
        0..=2 => Err(Error::InvalidDimension(n)),
        3..=9 => {
            let (_, coeffs) = SEED_REAL[n - 3];
            Ok(BasePolynomials::Seed(IntPoly::from_i64(coeffs)))
        }
        10..=18 => {
            let (_, bits) = SEED_MOD2[n - 10];
            let (_, digits) = SEED_MOD3[n - 10];
            Ok(BasePolynomials::ResiduePair {
                g2: ResiduePoly::new(2, bits.to_vec()),
                g3: ResiduePoly::new(3, digits.to_vec()),
            })
        }
        _ => Ok(BasePolynomials::ResiduePair {
            g2: search_mod2(n)?,
            g3: search_mod3(n)?,
        }),
    }
}

/// Advances a little-endian base-p counter; false when it wraps to zero.
fn advance_counter(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// First monic irreducible of degree n over F_2 whose coefficients of
/// x^{n-1} through x^{n-6} are all zero.
fn search_mod2(n: usize) -> Result<ResiduePoly> {
    debug_assert!(n > 18);
    let mut free = vec![0u64; n - 6];
    loop {
        let mut coeffs = vec![0u64; n + 1];
        coeffs[..n - 6].copy_from_slice(&free);
        coeffs[n] = 1;
        let candidate = ResiduePoly::new(2, coeffs);
        if candidate.degree() == Some(n) && modpoly::is_irreducible(&candidate)? {
            return Ok(candidate);
        }
        if !advance_counter(&mut free, 2) {
            return Err(Error::SearchExhausted(n));
        }
    }
}

/// First product (x - 1) * h with h monic irreducible of degree n - 1 over
/// F_3, such that the product's coefficients of x^{n-1} through x^{n-6}
/// match those of T_n mod 3. The product's constant term is automatically
/// nonzero because irreducible h has nonzero constant term.
fn search_mod3(n: usize) -> Result<ResiduePoly> {
    debug_assert!(n > 18);
    let t_n = ResiduePoly::from_int_poly(&chebyshev_t(n), 3);
    // (x - 1) h has coefficient h_{m-1} - h_m at x^m, so the six targets
    // below the leading term fix the top six coefficients of h.
    let mut forced = vec![0u64; 6]; // h_{n-2}, h_{n-3}, ..., h_{n-7}
    let mut above = 1u64; // h_{n-1}, the leading coefficient
    for (slot, i) in (1..=6).enumerate() {
        let target = t_n.coeff(n - i);
        forced[slot] = (target + above) % 3;
        above = forced[slot];
    }
    let m = n - 1;
    let x_minus_one = ResiduePoly::new(3, vec![2, 1]);
    let mut free = vec![0u64; m - 6];
    loop {
        let mut coeffs = vec![0u64; m + 1];
        coeffs[..m - 6].copy_from_slice(&free);
        for (slot, i) in (1..=6).enumerate() {
            coeffs[m - i] = forced[slot];
        }
        coeffs[m] = 1;
        let h = ResiduePoly::new(3, coeffs);
        if h.degree() == Some(m) && modpoly::is_irreducible(&h)? {
            return Ok(h.mul(&x_minus_one));
        }
        if !advance_counter(&mut free, 3) {
            return Err(Error::SearchExhausted(n));
        }
    }
}

/// Checks that a residue pair really is valid building material for
/// dimension n: g2 monic irreducible of degree n over F_2; g3 monic of
/// degree n over F_3, a linear times an irreducible, nonzero constant term;
/// and both match T_n mod 2 respectively mod 3 on the coefficients of
/// x^{n-1} through x^{n-6}. Used both as a post-search assertion and to
/// vet cache lines read from disk.
pub fn validate_residue_pair(n: usize, g2: &ResiduePoly, g3: &ResiduePoly) -> Result<()> {
    let fail = |msg: String| Err(Error::Parse(format!("pair for n={n} invalid: {msg}")));
    if n < 10 {
        return fail("dimension below 10".to_string());
    }
    if g2.modulus() != 2 || g3.modulus() != 3 {
        return fail("wrong moduli".to_string());
    }
    if g2.degree() != Some(n) || !g2.is_monic() {
        return fail("mod-2 part not monic of the stated degree".to_string());
    }
    if g3.degree() != Some(n) || !g3.is_monic() {
        return fail("mod-3 part not monic of the stated degree".to_string());
    }
    if g3.coeff(0) == 0 {
        return fail("mod-3 part has zero constant term".to_string());
    }
    let t_n = chebyshev_t(n);
    let t2 = ResiduePoly::from_int_poly(&t_n, 2);
    let t3 = ResiduePoly::from_int_poly(&t_n, 3);
    for i in 1..=6 {
        if g2.coeff(n - i) != t2.coeff(n - i) {
            return fail(format!("mod-2 coefficient of x^{} off target", n - i));
        }
        if g3.coeff(n - i) != t3.coeff(n - i) {
            return fail(format!("mod-3 coefficient of x^{} off target", n - i));
        }
    }
    if !modpoly::factor_degree_pattern(g2)?.is_irreducible_of_degree(n) {
        return fail("mod-2 part not irreducible".to_string());
    }
    if !modpoly::factor_degree_pattern(g3)?.is_linear_times_irreducible(n) {
        return fail("mod-3 part not a linear times an irreducible".to_string());
    }
    Ok(())
}

/// As [`base_polynomials`], but for n > 18 consults a one-line-per-degree
/// text cache under `cache_dir` before searching, and records fresh search
/// results there. Invalid or stale cache lines are ignored and replaced.
pub fn base_polynomials_cached(n: usize, cache_dir: Option<&Path>) -> Result<BasePolynomials> {
    let Some(dir) = cache_dir else {
        return base_polynomials(n);
    };
    if n <= 18 {
        return base_polynomials(n);
    }
    let path = dir.join("base-polynomials.txt");
    let mut known: BTreeMap<usize, (ResiduePoly, ResiduePoly)> = BTreeMap::new();
    if let Ok(contents) = std::fs::read_to_string(&path) {
        for line in contents.lines() {
            if line.trim().is_empty() {
                continue;
            }
            if let Ok((m, g2, g3)) = textio::parse_base_cache_line(line) {
                if validate_residue_pair(m, &g2, &g3).is_ok() {
                    known.insert(m, (g2, g3));
                }
            }
        }
    }
    if let Some((g2, g3)) = known.get(&n) {
        return Ok(BasePolynomials::ResiduePair {
            g2: g2.clone(),
            g3: g3.clone(),
        });
    }
    let result = base_polynomials(n)?;
    if let BasePolynomials::ResiduePair { g2, g3 } = &result {
        known.insert(n, (g2.clone(), g3.clone()));
        std::fs::create_dir_all(dir)?;
        let mut out = String::new();
        for (m, (g2, g3)) in &known {
            out.push_str(&textio::format_base_cache_line(*m, g2, g3));
            out.push('\n');
        }
        std::fs::write(&path, out)?;
    }
    Ok(result)
}

/// Solves for basis weights a_7..a_n in {-2,...,3} making
/// g = T_n + a_7 T_{n-7} + ... + a_n T_0 reduce to g2 mod 2 and g3 mod 3,
/// then, if the constant term shares a factor with q, shifts a_n by 6
/// (staying within [-6, 6]). The solve is triangular: a_i is fixed by the
/// coefficient of x^{n-i}, which earlier weights cannot reach.
///
/// The returned g always has zero coefficient at x^{n-1} and -2n at
/// x^{n-2}, keeps the mod-2/mod-3 congruences, has constant term coprime to
/// q, and passes [`robinson_check`].
pub fn assemble_g(
    n: usize,
    g2: &ResiduePoly,
    g3: &ResiduePoly,
    q: PrimePower,
) -> Result<(Vec<i64>, IntPoly)> {
    assert!(n >= 10, "weight solve needs dimension at least 10");
    assert_eq!(g2.modulus(), 2, "first target must live mod 2");
    assert_eq!(g3.modulus(), 3, "second target must live mod 3");
    assert_eq!(g2.degree(), Some(n), "mod-2 target degree mismatch");
    assert_eq!(g3.degree(), Some(n), "mod-3 target degree mismatch");
    let basis = chebyshev_basis(n);
    let mut g = basis[n].clone();
    let mut weights: Vec<i64> = Vec::with_capacity(n - 6);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    for i in 7..=n {
        let pos = n - i;
        let cur = g.coeff(pos);
        let r2 = BigInt::from(g2.coeff(pos));
        let r3 = BigInt::from(g3.coeff(pos));
        let mut chosen = None;
        for w in -2i64..=3 {
            let val = &cur + BigInt::from(w);
            if val.mod_floor(&two) == r2 && val.mod_floor(&three) == r3 {
                chosen = Some(w);
                break;
            }
        }
        let w = chosen.expect("{-2..3} is a complete residue system mod 6");
        if w != 0 {
            g = &g + &basis[pos].scale(&BigInt::from(w));
        }
        weights.push(w);
    }
    let q_big = BigInt::from(q.q());
    if !g.constant().gcd(&q_big).is_one() {
        // The constant term is coprime to 6, so q must involve a prime
        // >= 5 dividing it; a shift by 6 fixes that without disturbing the
        // congruences. Both directions work when a_n = 0; take +6 then.
        let last = weights.last_mut().expect("n >= 10 gives weights");
        let delta = if *last > 0 { -6 } else { 6 };
        *last += delta;
        g = &g + &IntPoly::from_i64(&[delta]);
        debug_assert!(g.constant().gcd(&q_big).is_one());
    }
    debug_assert_eq!(ResiduePoly::from_int_poly(&g, 2), *g2);
    debug_assert_eq!(ResiduePoly::from_int_poly(&g, 3), *g3);
    debug_assert!(robinson_check(&weights));
    debug_assert_eq!(g.coeff(n - 2), BigInt::from(-(2 * n as i64)));
    Ok((weights, g))
}

/// The five structural requirements checked on every construction:
/// h1: the expansion f has a nonzero coefficient away from x^0, x^n, x^2n;
/// h2: g is totally real with all roots strictly inside (-2 sqrt q, 2 sqrt q);
/// h3: the constant term of g is coprime to q;
/// h4: some prime reduction of g is irreducible (2 serves for every n here);
/// h5: some prime reduction of g is a linear times an irreducible
///     (3 serves for n >= 3; n = 2 searches a small prime list).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    pub h1: bool,
    pub h2: bool,
    pub h3: bool,
    pub h4: bool,
    pub h5: bool,
}

impl HypothesisFlags {
    fn first_failure(&self) -> Option<u8> {
        [self.h1, self.h2, self.h3, self.h4, self.h5]
            .iter()
            .position(|ok| !ok)
            .map(|k| k as u8 + 1)
    }
}

fn ser_int_poly<S: Serializer>(f: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&textio::format_int_poly(f))
}

fn ser_weil_poly<S: Serializer>(f: &WeilPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    ser_int_poly(f.poly(), s)
}

fn ser_residue_opt<S: Serializer>(
    f: &Option<ResiduePoly>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let f = f.as_ref().expect("field skipped when absent");
    s.serialize_str(&textio::format_residue_poly(f))
}

/// Full trace of one construction: the chosen residue shapes (when the
/// weight solve ran), the weights, the real polynomial g, the expanded Weil
/// polynomial f, and the decisions made about it. Polynomials serialize as
/// ascending comma-joined coefficient strings that the text parsers accept
/// back unchanged.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub n: usize,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_residue_opt")]
    pub g2: Option<ResiduePoly>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_residue_opt")]
    pub g3: Option<ResiduePoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_coeffs: Option<Vec<i64>>,
    #[serde(serialize_with = "ser_int_poly")]
    pub g: IntPoly,
    #[serde(serialize_with = "ser_weil_poly")]
    pub f: WeilPoly,
    pub hypothesis_flags: HypothesisFlags,
    pub verdict: SimplicityVerdict,
}

/// For a quadratic g, hunts for a small prime whose reduction splits g into
/// two linear factors (the degree-2 reading of "linear times irreducible").
fn split_witness_for_quadratic(g: &IntPoly) -> Result<bool> {
    for p in first_primes(100) {
        let gp = ResiduePoly::from_int_poly(g, p);
        if gp.degree() != Some(2) {
            continue;
        }
        if modpoly::factor_degree_pattern(&gp)?.is_linear_times_irreducible(2) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Builds an absolutely simple ordinary Weil polynomial of degree 2n over
/// F_q and returns the full trace.
///
/// Dimension 2 uses the fixed quartic x^4 + x^3 + x^2 + qx + q^2 (real
/// companion x^2 + x + (1 - 2q)); dimensions 3 through 9 use built-in
/// seeds; from 10 on the basis-weight pipeline runs. In every case all
/// five hypothesis checks are evaluated exactly and the final verdict is
/// recomputed from scratch by the general decision procedure; any failure
/// surfaces as [`Error::HypothesisFailed`] (1-5 for the checks, 6 for the
/// final verdict), which no reachable input should trigger.
pub fn construct_absolutely_simple(n: usize, q: PrimePower) -> Result<ConstructionReport> {
    construct_with_cache(n, q, None)
}

/// As [`construct_absolutely_simple`], with an optional disk cache for the
/// dimension > 18 base-polynomial searches.
pub fn construct_with_cache(
    n: usize,
    q: PrimePower,
    cache_dir: Option<&Path>,
) -> Result<ConstructionReport> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let (g, g2, g3, a_coeffs) = if n == 2 {
        let g = IntPoly::new(vec![
            BigInt::one() - BigInt::from(2) * BigInt::from(q.q()),
            BigInt::one(),
            BigInt::one(),
        ]);
        (g, None, None, None)
    } else {
        match base_polynomials_cached(n, cache_dir)? {
            BasePolynomials::Seed(g) => (g, None, None, None),
            BasePolynomials::ResiduePair { g2, g3 } => {
                let (a, g) = assemble_g(n, &g2, &g3, q)?;
                (g, Some(g2), Some(g3), Some(a))
            }
        }
    };
    let f_poly = weilcore::real_to_weil(&g, q)?;
    let h1 = f_poly
        .coeffs()
        .iter()
        .enumerate()
        .any(|(j, c)| j != 0 && j != n && j != 2 * n && !c.is_zero());
    let h2 = weilcore::is_real_weil_strict(&g, q);
    let h3 = g.constant().gcd(&BigInt::from(q.q())).is_one();
    let h4 = modpoly::factor_degree_pattern(&ResiduePoly::from_int_poly(&g, 2))?
        .is_irreducible_of_degree(n);
    let h5 = if n >= 3 {
        modpoly::factor_degree_pattern(&ResiduePoly::from_int_poly(&g, 3))?
            .is_linear_times_irreducible(n)
    } else {
        split_witness_for_quadratic(&g)?
    };
    let flags = HypothesisFlags { h1, h2, h3, h4, h5 };
    if let Some(k) = flags.first_failure() {
        return Err(Error::HypothesisFailed(k));
    }
    let f = WeilPoly::new(f_poly, q)?;
    let verdict = weilcore::absolute_simplicity(&f)?;
    if verdict != SimplicityVerdict::AbsolutelySimple {
        return Err(Error::HypothesisFailed(6));
    }
    Ok(ConstructionReport {
        n,
        q: q.q(),
        g2,
        g3,
        a_coeffs,
        g,
        f,
        hypothesis_flags: flags,
        verdict,
    })
}

/// One row of the built-in data verification.
#[derive(Debug, Clone, Serialize)]
pub struct TableVerification {
    pub n: usize,
    pub kind: &'static str,
    pub ok: bool,
    pub detail: String,
}

/// Re-derives every property the built-in seed data is trusted for: the
/// dimension 3..9 seeds must pass all five structural conditions (the
/// coprimality one at q in {2, 3, 5, 7}), and the dimension 10..18 residue
/// pairs must pass [`validate_residue_pair`]. A transcription error in the
/// constant tables shows up here as a failing row.
pub fn verify_builtin_tables() -> Result<Vec<TableVerification>> {
    let mut rows = Vec::new();
    for (n, coeffs) in SEED_REAL {
        let g = IntPoly::from_i64(coeffs);
        let mut problems = Vec::new();
        if g.degree() != Some(n) || !g.is_monic() {
            problems.push("not monic of the stated degree".to_string());
        }
        if !g.coeff(n - 1).is_zero() {
            problems.push("nonzero coefficient at x^{n-1}".to_string());
        }
        let c = g.coeff(n - 2);
        let minus_2n = BigInt::from(-(2 * n as i64));
        if c != minus_2n && (&c % BigInt::from(n as i64)).is_zero() {
            problems.push(format!("second coefficient {c} collides with the dimension"));
        }
        if !weilcore::is_real_weil_strict(&g, PrimePower::from_u64(2)?) {
            problems.push("roots not confined to (-2 sqrt 2, 2 sqrt 2)".to_string());
        }
        for q in [2u64, 3, 5, 7] {
            if !g.constant().gcd(&BigInt::from(q)).is_one() {
                problems.push(format!("constant term shares a factor with {q}"));
            }
        }
        if !modpoly::factor_degree_pattern(&ResiduePoly::from_int_poly(&g, 2))?
            .is_irreducible_of_degree(n)
        {
            problems.push("reducible mod 2".to_string());
        }
        if !modpoly::factor_degree_pattern(&ResiduePoly::from_int_poly(&g, 3))?
            .is_linear_times_irreducible(n)
        {
            problems.push("not linear times irreducible mod 3".to_string());
        }
        rows.push(TableVerification {
            n,
            kind: "seed",
            ok: problems.is_empty(),
            detail: problems.join("; "),
        });
    }
    for idx in 0..SEED_MOD2.len() {
        let (n, bits) = SEED_MOD2[idx];
        let (_, digits) = SEED_MOD3[idx];
        let g2 = ResiduePoly::new(2, bits.to_vec());
        let g3 = ResiduePoly::new(3, digits.to_vec());
        let problem = validate_residue_pair(n, &g2, &g3).err();
        rows.push(TableVerification {
            n,
            kind: "residue_pair",
            ok: problem.is_none(),
            detail: problem.map(|e| e.to_string()).unwrap_or_default(),
        });
    }
    Ok(rows)
}
