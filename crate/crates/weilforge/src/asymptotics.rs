//! Quantitative estimates: exact rational constants, certified enclosures of
//! the irrational ones, the epsilon threshold machinery, surface-count bound
//! formulas, and an exhaustive verification of the residue-class counting
//! identity that underlies them.
//!
//! Nothing here uses floating point. Irrational values (square roots, one
//! exponential) are enclosed in intervals with exact rational endpoints, and
//! every comparison against an integer count is resolved by sign analysis and
//! squaring.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::modpoly;
use crate::numth::{first_primes, is_prime_u64, PrimePower};
use crate::Result;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// A closed interval with exact rational endpoints.
///
/// Used to certify irrational quantities: the true value is guaranteed to lie
/// between `lo` and `hi`. All arithmetic is outward-safe, so combining
/// intervals never loses containment.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> RatInterval {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> RatInterval {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn offset(&self, c: &BigRational) -> RatInterval {
        RatInterval::new(&self.lo + c, &self.hi + c)
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, other: &RatInterval) -> RatInterval {
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "division by an interval containing zero"
        );
        let recip = RatInterval::new(other.hi.recip(), other.lo.recip());
        self.mul(&recip)
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        let mut out = RatInterval::point(BigRational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Pads both ends symmetrically so the width becomes exactly `target`.
    /// The current width must not exceed `target`.
    fn widen_to(&self, target: &BigRational) -> RatInterval {
        let pad = (target - self.width()) / rat_int(2);
        assert!(!pad.is_negative(), "interval already wider than target");
        RatInterval::new(&self.lo - &pad, &self.hi + &pad)
    }
}

/// Encloses sqrt(x) for a non-negative rational x, with width at most `eps`.
///
/// Uses integer square roots of scaled numerators, so the endpoints are exact
/// dyadic multiples of 1/denominator.
pub fn sqrt_enclosure(x: &BigRational, eps: &BigRational) -> RatInterval {
    assert!(!x.is_negative(), "square root of a negative rational");
    assert!(eps.is_positive());
    if x.is_zero() {
        return RatInterval::point(BigRational::zero());
    }
    // sqrt(a/b) = sqrt(a*b) / b, so it suffices to bracket an integer root.
    let a = x.numer().to_biguint().expect("checked non-negative");
    let b = x.denom().to_biguint().expect("denominator positive");
    let m = &a * &b;
    // Achieved width is 1 / (2^k * b); pick k large enough.
    let need = (eps * BigRational::from(BigInt::from(b.clone()))).recip();
    let k = need.ceil().to_integer().to_biguint().unwrap().bits() as u32 + 1;
    let scaled = &m << (2 * k);
    let s = scaled.sqrt();
    let denom = BigInt::from(&b << k);
    let lo = BigRational::new(BigInt::from(s.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from(s + 1u32), denom);
    RatInterval::new(lo, hi)
}

/// Encloses e^(3/2) by the Taylor series with an exact geometric tail bound.
fn exp_three_halves(eps: &BigRational) -> RatInterval {
    assert!(eps.is_positive());
    let x = rat(3, 2);
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut i: i64 = 0;
    loop {
        i += 1;
        term = term * &x / rat_int(i);
        sum += &term;
        // After the x^i/i! term the remainder is below term * x/(i+1-x)
        // once i+1 exceeds x, by comparison with a geometric series.
        if i >= 2 {
            let tail = &term * &x / (rat_int(i + 1) - &x);
            if tail < *eps {
                return RatInterval::new(sum.clone(), sum + tail);
            }
        }
    }
}

fn sqrt3_over_6(eps: &BigRational) -> RatInterval {
    sqrt_enclosure(&rat_int(3), &(eps * rat_int(6))).scale(&rat(1, 6))
}

/// Tight enclosure of e^(3/2) * 2(1+sqrt2) * sqrt3 * (1+sqrt3/162)^3 / 3.
fn second_constant(eps: &BigRational) -> RatInterval {
    let mut sub = eps / rat_int(64);
    loop {
        let e = exp_three_halves(&sub);
        let one_plus_sqrt2 = sqrt_enclosure(&rat_int(2), &sub).offset(&BigRational::one());
        let sqrt3 = sqrt_enclosure(&rat_int(3), &sub);
        let bump = sqrt3
            .scale(&rat(1, 162))
            .offset(&BigRational::one())
            .pow(3);
        let value = e
            .mul(&one_plus_sqrt2.scale(&rat_int(2)))
            .mul(&sqrt3)
            .mul(&bump)
            .scale(&rat(1, 3));
        if value.width() <= *eps {
            return value;
        }
        sub /= rat_int(16);
    }
}

/// Tight enclosure of the second constant divided by 1+sqrt2.
fn third_constant(eps: &BigRational) -> RatInterval {
    let mut sub = eps / rat_int(64);
    loop {
        let c2 = second_constant(&sub);
        let one_plus_sqrt2 = sqrt_enclosure(&rat_int(2), &sub).offset(&BigRational::one());
        let value = c2.div(&one_plus_sqrt2);
        if value.width() <= *eps {
            return value;
        }
        sub /= rat_int(16);
    }
}

/// Volume of the region of coefficient vectors cut out by the real-root
/// conditions, per dimension n: (2^n / n!) * prod_{j=1..n} (2j/(2j-1))^(n+1-j).
///
/// Exact rational; this is the leading coefficient of the isogeny-class count
/// (32/3 at n = 2).
pub fn weil_coefficient_volume(n: usize) -> BigRational {
    assert!(n >= 1, "volume needs n >= 1");
    let mut value = BigRational::one();
    let mut factorial = BigInt::one();
    for j in 1..=n {
        factorial *= BigInt::from(j);
        let base = rat(2 * j as i64, 2 * j as i64 - 1);
        value *= base.pow((n + 1 - j) as i32);
    }
    value * BigRational::new(BigInt::from(2).pow(n as u32), factorial)
}

/// Certified enclosures of the three constants in the density bounds, plus the
/// growth factor used by the threshold machinery.
#[derive(Debug, Clone)]
pub struct ConstantEnclosures {
    /// sqrt(3)/6, about 0.288675.
    pub c1: RatInterval,
    /// e^(3/2) * 2(1+sqrt2) * sqrt3 * (1+sqrt3/162)^3 / 3, about 12.898608.
    pub c2: RatInterval,
    /// c2 / (1+sqrt2), about 5.342778.
    pub c3: RatInterval,
    /// (1/volume) * 6^(n^2) * c1^n * c3 * n(n+1) / (n-1)!.
    pub g_n: RatInterval,
}

/// Computes the constant enclosures. `c1`, `c2`, `c3` come back with width
/// slightly below `precision` (padded symmetrically, so a correctly rounded
/// 6-decimal reading of each constant lies inside when precision is 1e-6).
/// `g_n` grows like 6^(n^2), so its width is controlled relative to its size:
/// width <= precision * max(1, g_n).
pub fn constant_enclosures(n: usize, precision: &BigRational) -> ConstantEnclosures {
    assert!(n >= 1, "enclosures need n >= 1");
    assert!(precision.is_positive(), "precision must be positive");
    let tight = precision / rat_int(8);
    let shrink = precision - (precision / BigRational::from(BigInt::from(1u64 << 16)));
    let c1 = sqrt3_over_6(&tight).widen_to(&shrink);
    let c2 = second_constant(&tight).widen_to(&shrink);
    let c3 = third_constant(&tight).widen_to(&shrink);

    // Exact rational part of the growth factor.
    let mut factorial = BigInt::one();
    for j in 1..n {
        factorial *= BigInt::from(j);
    }
    let scale = BigRational::new(BigInt::from(6).pow((n * n) as u32), factorial)
        * rat_int((n * (n + 1)) as i64)
        / weil_coefficient_volume(n);

    let mut sub = precision / rat_int(64);
    let g_n = loop {
        let candidate = sqrt3_over_6(&sub)
            .pow(n as u32)
            .mul(&third_constant(&sub))
            .scale(&scale);
        let mut allowance = precision.clone();
        if candidate.hi > BigRational::one() {
            allowance *= &candidate.hi;
        }
        if candidate.width() <= allowance {
            break candidate;
        }
        sub /= rat_int(16);
    };

    ConstantEnclosures { c1, c2, c3, g_n }
}

/// The epsilon-dependent thresholds: the number of primes `k`, their product
/// `m`, and the field-size cutoff `big_m` above which the density guarantee
/// applies.
#[derive(Debug, Clone, PartialEq)]
pub struct Thresholds {
    /// Smallest k with (1 - 1/(2n))^k <= epsilon/8.
    pub k: usize,
    /// Product of the first k primes.
    pub m: BigUint,
    /// (8 * g_n * m / epsilon)^2, computed from the upper end of the g_n
    /// enclosure so the cutoff errs on the safe side.
    pub big_m: BigRational,
}

fn check_epsilon(epsilon: &BigRational) -> Result<()> {
    if !epsilon.is_positive() || epsilon > &BigRational::one() {
        return Err(Error::InvalidEpsilon(epsilon.to_string()));
    }
    Ok(())
}

/// Computes the thresholds for dimension n >= 2 and epsilon in (0, 1].
pub fn thresholds(n: usize, epsilon: &BigRational) -> Result<Thresholds> {
    if n < 2 {
        return Err(Error::InvalidDegree(n, "thresholds need dimension at least 2"));
    }
    check_epsilon(epsilon)?;
    // Smallest k with 8 * den * (2n-1)^k <= num * (2n)^k, all integers.
    let num = epsilon.numer();
    let den = epsilon.denom();
    let shrink = BigInt::from(2 * n as u64 - 1);
    let grow = BigInt::from(2 * n as u64);
    let mut k = 0usize;
    let mut lhs = den * BigInt::from(8);
    let mut rhs = num.clone();
    loop {
        k += 1;
        lhs *= &shrink;
        rhs *= &grow;
        if lhs <= rhs {
            break;
        }
    }
    let mut m = BigUint::one();
    for p in first_primes(k) {
        m *= BigUint::from(p);
    }
    let g_hi = constant_enclosures(n, &rat(1, 1_000_000_000)).g_n.hi;
    let factor = rat_int(8) * g_hi * BigRational::from(BigInt::from(m.clone())) / epsilon;
    let big_m = factor.pow(2);
    Ok(Thresholds { k, m, big_m })
}

/// The field-size threshold (659/epsilon)^2 for the exact surface-count
/// statement.
pub fn surface_density_threshold(epsilon: &BigRational) -> Result<BigRational> {
    check_epsilon(epsilon)?;
    Ok((rat_int(659) / epsilon).pow(2))
}

/// A bound of the shape q_coeff * q + sqrt_q_coeff * sqrt(q), with exact
/// rational coefficients. Comparisons against integer counts are decided by
/// squaring, never by approximating sqrt(q).
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtBound {
    pub q_coeff: BigRational,
    pub sqrt_q_coeff: BigRational,
}

impl SqrtBound {
    /// Orders `count` against the bound's value at q.
    pub fn compare_count(&self, count: &BigInt, q: u64) -> Ordering {
        // count vs Bq + C sqrt(q)  <=>  count - Bq vs C sqrt(q).
        let lhs = BigRational::from(count.clone()) - &self.q_coeff * rat_int(q as i64);
        let c = &self.sqrt_q_coeff;
        let sl = rational_sign(&lhs);
        let sr = rational_sign(c);
        if sl != sr {
            return sl.cmp(&sr);
        }
        if sl == 0 {
            return Ordering::Equal;
        }
        // Same strict sign on both sides: compare squares, flipping for
        // negatives.
        let lhs2 = &lhs * &lhs;
        let rhs2 = c * c * rat_int(q as i64);
        let cmp = lhs2.cmp(&rhs2);
        if sl > 0 {
            cmp
        } else {
            cmp.reverse()
        }
    }

    /// True when the bound's value at q is strictly positive.
    pub fn is_positive(&self, q: u64) -> bool {
        self.compare_count(&BigInt::zero(), q) == Ordering::Less
    }

    /// Decimal rendering of the value at q, truncated toward zero. For display
    /// only, never for decisions.
    pub fn approx(&self, q: u64, places: u32) -> String {
        let scale = BigInt::from(10).pow(places + 4);
        let root = (BigInt::from(q) * &scale * &scale).sqrt();
        let approx = &self.q_coeff * rat_int(q as i64)
            + &self.sqrt_q_coeff * BigRational::new(root, scale);
        decimal_truncate(&approx, places)
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

/// Renders a rational as a fixed-point decimal, truncating toward zero.
pub fn decimal_truncate(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = (r * BigRational::from(scale.clone())).to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let magnitude = scaled.magnitude();
    let whole = magnitude / scale.magnitude();
    let frac = magnitude % scale.magnitude();
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{frac:0>width$}",
            width = places as usize,
            frac = frac.to_string()
        )
    }
}

/// The three surface-count bounds at a given q.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceBounds {
    /// Upper bound on the total number of isogeny classes of abelian surfaces.
    pub i_upper: SqrtBound,
    /// Lower bound on the number of simple ordinary classes.
    pub o_simple_lower: SqrtBound,
    /// Lower bound on the number of absolutely simple ordinary classes.
    pub o_abs_simple_lower: SqrtBound,
}

/// Evaluates the bound coefficients at q. Each bound has the form
/// (32/3) (phi(q)/q) q^(3/2) + beta q + gamma sqrt(q), which collapses to
/// beta q + ((32/3) phi(q) + gamma) sqrt(q).
pub fn surface_bounds(q: PrimePower) -> SurfaceBounds {
    let main = rat(32, 3) * rat_int(q.phi() as i64);
    SurfaceBounds {
        i_upper: SqrtBound {
            q_coeff: rat_int(3473),
            sqrt_q_coeff: &main + rat_int(8359),
        },
        o_simple_lower: SqrtBound {
            q_coeff: rat_int(-8),
            sqrt_q_coeff: &main - rat_int(8361),
        },
        o_abs_simple_lower: SqrtBound {
            q_coeff: rat_int(-12),
            sqrt_q_coeff: &main - rat_int(8376),
        },
    }
}

/// Per-prime statistics from the reduction verification.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeReductionStat {
    pub p: u64,
    /// Number of monic degree-n irreducibles over F_p.
    pub irreducible: u64,
    /// Number of monic degree-n products of a linear and an irreducible.
    pub linear_times_irreducible: u64,
    /// 2n * irreducible >= p^n, i.e. the miss probability is at most 1 - 1/(2n).
    pub irreducible_bound_ok: bool,
    /// (2n-2) * linear_times_irreducible >= p^n.
    pub linear_bound_ok: bool,
}

/// Outcome of the exhaustive reduction check over Z/m.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub primes: Vec<u64>,
    /// m = product of the primes.
    pub modulus: u64,
    /// m^n, the number of monic degree-n polynomials over Z/m.
    pub space: u64,
    /// How many of them have an irreducible reduction at some prime AND a
    /// linear-times-irreducible reduction at some prime, counted one by one.
    pub exhaustive_count: u64,
    /// The same number predicted by inclusion-exclusion from per-prime counts.
    pub formula_count: u64,
    pub identity_holds: bool,
    /// The inclusion-exclusion lower bound
    /// m^n (1 - prod(1 - a_p/p^n) - prod(1 - b_p/p^n)) as an exact rational.
    pub lower_bound: RatRepr,
    pub lower_bound_ok: bool,
    pub per_prime: Vec<PrimeReductionStat>,
}

/// Exhaustively verifies, over Z/m with m a product of distinct primes, that
/// the count of monic degree-n polynomials whose reduction is irreducible at
/// some prime and linear-times-irreducible at some prime matches the
/// inclusion-exclusion product formula, and that each per-prime density bound
/// holds. The search space m^n is capped at 10^7.
pub fn reduction_verify(n: usize, primes: &[u64]) -> Result<ReductionReport> {
    if n <= 2 {
        return Err(Error::InvalidDegree(n, "reduction check needs degree at least 3"));
    }
    if primes.is_empty() {
        return Err(Error::BadPrimeList("empty".into()));
    }
    for &p in primes {
        if !is_prime_u64(p) {
            return Err(Error::BadPrimeList(format!("{p} is not prime")));
        }
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(Error::BadPrimeList("primes must be distinct".into()));
    }
    let mut modulus = 1u64;
    for &p in primes {
        modulus = modulus
            .checked_mul(p)
            .ok_or_else(|| Error::TooLarge("prime product overflows".into()))?;
    }
    let mut space = 1u64;
    for _ in 0..n {
        space = space
            .checked_mul(modulus)
            .filter(|&s| s <= 10_000_000)
            .ok_or_else(|| {
                Error::TooLarge(format!("{modulus}^{n} exceeds the 10^7 exhaustive budget"))
            })?;
    }

    // Classify every monic degree-n polynomial over each F_p once, then walk
    // the Z/m space with table lookups.
    struct PrimeTable {
        p: u64,
        in_a: Vec<bool>,
        in_b: Vec<bool>,
    }
    let mut tables = Vec::new();
    for &p in primes {
        let pn = (p as usize).pow(n as u32);
        let mut in_a = vec![false; pn];
        let mut in_b = vec![false; pn];
        for f in modpoly::monic_polys(p, n) {
            let mut idx = 0usize;
            for i in (0..n).rev() {
                idx = idx * p as usize + f.coeff(i) as usize;
            }
            let pattern = modpoly::factor_degree_pattern(&f).expect("prime modulus");
            in_a[idx] = pattern.is_irreducible_of_degree(n);
            in_b[idx] = pattern.is_linear_times_irreducible(n);
        }
        tables.push(PrimeTable { p, in_a, in_b });
    }

    let mut exhaustive: u64 = 0;
    let mut coeffs = vec![0u64; n];
    loop {
        let mut cond_a = false;
        let mut cond_b = false;
        for t in &tables {
            let mut idx = 0usize;
            for i in (0..n).rev() {
                idx = idx * t.p as usize + (coeffs[i] % t.p) as usize;
            }
            cond_a |= t.in_a[idx];
            cond_b |= t.in_b[idx];
        }
        if cond_a && cond_b {
            exhaustive += 1;
        }
        // Odometer step.
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            coeffs[pos] += 1;
            if coeffs[pos] < modulus {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }

    // Independent counts via the divisor-sum formulas.
    let mut per_prime = Vec::new();
    let mut miss_a = BigInt::one();
    let mut miss_b = BigInt::one();
    let mut miss_both = BigInt::one();
    for &p in primes {
        let pn = BigInt::from(p).pow(n as u32);
        let a = modpoly::count_irreducible(p, n)?;
        let b = modpoly::count_linear_times_irreducible(p, n)?;
        let a_int = BigInt::from(a.clone());
        let b_int = BigInt::from(b.clone());
        per_prime.push(PrimeReductionStat {
            p,
            irreducible: a.to_u64().expect("fits: space is capped"),
            linear_times_irreducible: b.to_u64().expect("fits: space is capped"),
            irreducible_bound_ok: BigInt::from(2 * n as u64) * &a_int >= pn,
            linear_bound_ok: BigInt::from(2 * n as u64 - 2) * &b_int >= pn,
        });
        miss_a *= &pn - &a_int;
        miss_b *= &pn - &b_int;
        miss_both *= &pn - &a_int - &b_int;
    }
    let space_big = BigInt::from(space);
    let formula = &space_big - &miss_a - &miss_b + &miss_both;
    let formula_count = formula.to_u64().expect("count fits in the capped space");
    let lower = BigRational::from(&space_big - &miss_a - &miss_b);
    let lower_ok = BigRational::from(BigInt::from(exhaustive)) >= lower;

    Ok(ReductionReport {
        n,
        primes: primes.to_vec(),
        modulus,
        space,
        exhaustive_count: exhaustive,
        formula_count,
        identity_holds: exhaustive == formula_count,
        lower_bound: RatRepr::from(&lower),
        lower_bound_ok: lower_ok,
        per_prime,
    })
}

/// Exact rational in serialized form: [numerator, denominator] as decimal
/// strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatRepr(pub [String; 2]);

impl From<&BigRational> for RatRepr {
    fn from(r: &BigRational) -> RatRepr {
        RatRepr([r.numer().to_string(), r.denom().to_string()])
    }
}

/// Interval in serialized form: [lo, hi].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalRepr(pub [RatRepr; 2]);

impl From<&RatInterval> for IntervalRepr {
    fn from(iv: &RatInterval) -> IntervalRepr {
        IntervalRepr([RatRepr::from(iv.lo()), RatRepr::from(iv.hi())])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SqrtBoundRepr {
    pub q_coeff: RatRepr,
    pub sqrt_q_coeff: RatRepr,
    /// Truncated decimal value at the report's q, for human readers.
    pub approx: String,
}

/// Machine-readable summary of everything this module can say about a given
/// (n, q, epsilon) triple. Optional parts are omitted when their inputs are.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<RatRepr>,
    pub volume: RatRepr,
    pub c1: IntervalRepr,
    pub c2: IntervalRepr,
    pub c3: IntervalRepr,
    pub g_n: IntervalRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_q: Option<RatRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub big_m: Option<RatRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_upper: Option<SqrtBoundRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub o_simple_lower: Option<SqrtBoundRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub o_abs_simple_lower: Option<SqrtBoundRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface_threshold: Option<RatRepr>,
}

/// Assembles a bounds report. `n >= 1`; thresholds additionally need `n >= 2`
/// and are only computed when epsilon is supplied.
pub fn bounds_report(
    n: usize,
    q: Option<PrimePower>,
    epsilon: Option<&BigRational>,
    precision: &BigRational,
) -> Result<BoundsReport> {
    if n < 1 {
        return Err(Error::InvalidDegree(n, "bounds need dimension at least 1"));
    }
    let enclosures = constant_enclosures(n, precision);
    let mut report = BoundsReport {
        n,
        q: q.map(|pp| pp.q()),
        epsilon: epsilon.map(RatRepr::from),
        volume: RatRepr::from(&weil_coefficient_volume(n)),
        c1: IntervalRepr::from(&enclosures.c1),
        c2: IntervalRepr::from(&enclosures.c2),
        c3: IntervalRepr::from(&enclosures.c3),
        g_n: IntervalRepr::from(&enclosures.g_n),
        r_q: None,
        k: None,
        m: None,
        big_m: None,
        i_upper: None,
        o_simple_lower: None,
        o_abs_simple_lower: None,
        surface_threshold: None,
    };
    if let Some(pp) = q {
        report.r_q = Some(RatRepr::from(&pp.ratio_phi()));
        let bounds = surface_bounds(pp);
        let repr = |b: &SqrtBound| SqrtBoundRepr {
            q_coeff: RatRepr::from(&b.q_coeff),
            sqrt_q_coeff: RatRepr::from(&b.sqrt_q_coeff),
            approx: b.approx(pp.q(), 3),
        };
        report.i_upper = Some(repr(&bounds.i_upper));
        report.o_simple_lower = Some(repr(&bounds.o_simple_lower));
        report.o_abs_simple_lower = Some(repr(&bounds.o_abs_simple_lower));
    }
    if let Some(eps) = epsilon {
        let t = thresholds(n, eps)?;
        report.k = Some(t.k);
        report.m = Some(t.m.to_string());
        report.big_m = Some(RatRepr::from(&t.big_m));
        report.surface_threshold = Some(RatRepr::from(&surface_density_threshold(eps)?));
    }
    Ok(report)
}
