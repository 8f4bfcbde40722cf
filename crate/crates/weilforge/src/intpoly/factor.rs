//! Exact irreducibility over the rationals.
//!
//! The decision is layered so that the expensive exact machinery almost
//! never runs:
//!
//! 1. degree at most 4: integer-root isolation plus, for quartics, the
//!    resolvent cubic for splits into two quadratics; fully exact;
//! 2. a modular fast path: irreducible modulo some prime with squarefree
//!    reduction implies irreducible over Q;
//! 3. a degree sieve: factor degrees over Q must be subset sums of the
//!    modular factor pattern at every usable prime, so an empty
//!    intersection of proper subset sums proves irreducibility;
//! 4. the exact fallback: factor modulo one prime, Hensel-lift to a modulus
//!    beyond twice the Landau-Mignotte coefficient bound, and trial-divide
//!    every surviving factor combination. Reducibility claims are always
//!    certified by an exact division over Z.
//!
//! Every step is deterministic; no randomness is used anywhere.

use super::sturm::integer_roots;
use super::IntPoly;
use crate::modpoly::{self, ResiduePoly};
use crate::numth::first_primes;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Decide irreducibility over Q for a nonzero polynomial of degree >= 1.
///
/// Content and sign are irrelevant; units are not irreducible, so constants
/// return false.
pub fn is_irreducible_over_rationals(f: &IntPoly) -> bool {
    assert!(!f.is_zero(), "irreducibility of the zero polynomial");
    let f = f.primitive_part();
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    if f.constant().is_zero() {
        return false; // divisible by x
    }
    // Work with the monic associate lc^(n-1) f(x/lc): same factorization
    // structure over Q, integer coefficients.
    let monic = monic_associate(&f);
    if n <= 4 {
        return small_degree_irreducible(&monic);
    }
    if !monic.is_squarefree() {
        return false; // a repeated factor certainly exists
    }
    general_irreducible(&monic)
}

/// The monic polynomial lc^(n-1) f(x/lc), which has the same factorization
/// shape over Q as f.
fn monic_associate(f: &IntPoly) -> IntPoly {
    let lc = f.leading();
    if lc.is_one() {
        return f.clone();
    }
    let n = f.deg();
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..n {
        coeffs.push(f.coeff(i) * lc.pow((n - 1 - i) as u32));
    }
    coeffs.push(BigInt::one());
    IntPoly::new(coeffs)
}

/// Exact decision for monic polynomials of degree 2..4.
fn small_degree_irreducible(f: &IntPoly) -> bool {
    let n = f.deg();
    if !integer_roots(f).is_empty() {
        return false;
    }
    if n <= 3 {
        // with no linear factor, degrees 2 and 3 cannot split
        return true;
    }
    !quartic_splits_into_quadratics(f)
}

/// Does a monic integer quartic with no linear factor split into two monic
/// integer quadratics? Candidate values of s = v + z are integer roots of
/// the resolvent cubic, whose roots over C are the three pairings
/// r1 r2 + r3 r4 of the quartic's roots.
fn quartic_splits_into_quadratics(f: &IntPoly) -> bool {
    let c3 = f.coeff(3);
    let c2 = f.coeff(2);
    let c1 = f.coeff(1);
    let c0 = f.coeff(0);
    let resolvent = IntPoly::new(vec![
        -(&c3 * &c3 * &c0 - BigInt::from(4) * &c2 * &c0 + &c1 * &c1),
        &c1 * &c3 - BigInt::from(4) * &c0,
        -&c2,
        BigInt::one(),
    ]);
    for s in integer_roots(&resolvent) {
        // u + w = c3, u w = c2 - s
        let disc = &c3 * &c3 - BigInt::from(4) * (&c2 - &s);
        let t = match exact_sqrt(&disc) {
            Some(t) => t,
            None => continue,
        };
        for t in [t.clone(), -t] {
            let two = BigInt::from(2);
            let (u, ru) = (&c3 + &t).div_rem(&two);
            if !ru.is_zero() {
                continue;
            }
            let w = &c3 - &u;
            if verify_quadratic_split(f, &u, &w, &s, &c0, &c1) {
                return true;
            }
        }
    }
    false
}

fn verify_quadratic_split(
    f: &IntPoly,
    u: &BigInt,
    w: &BigInt,
    s: &BigInt,
    c0: &BigInt,
    c1: &BigInt,
) -> bool {
    let candidates: Vec<(BigInt, BigInt)> = if u != w {
        // c1 = u z + v w with v + z = s gives v = (c1 - u s) / (w - u)
        let denom = w - u;
        let num = c1 - u * s;
        let (v, r) = num.div_rem(&denom);
        if !r.is_zero() {
            return false;
        }
        let z = s - &v;
        vec![(v, z)]
    } else {
        // v + z = s, v z = c0
        let disc = s * s - BigInt::from(4) * c0;
        let r = match exact_sqrt(&disc) {
            Some(r) => r,
            None => return false,
        };
        let two = BigInt::from(2);
        let (v, rem) = (s + &r).div_rem(&two);
        if !rem.is_zero() {
            return false;
        }
        let z = s - &v;
        vec![(v, z)]
    };
    for (v, z) in candidates {
        let left = IntPoly::new(vec![v, u.clone(), BigInt::one()]);
        let right = IntPoly::new(vec![z, w.clone(), BigInt::one()]);
        if &(&left * &right) == f {
            return true;
        }
    }
    false
}

/// Exact integer square root of a nonnegative value, if it is a square.
fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    if &(&r * &r) == v {
        Some(r)
    } else {
        None
    }
}

const SIEVE_PRIME_BUDGET: usize = 10;

/// Decision for squarefree monic polynomials of degree >= 5.
fn general_irreducible(f: &IntPoly) -> bool {
    let n = f.deg();
    assert!(n < 120, "degree out of supported range");
    let full = (1u128 << n) | 1u128;

    // usable primes: squarefree reduction; collect factor patterns
    let mut usable: Vec<(u64, ResiduePoly, Vec<usize>)> = Vec::new();
    let mut allowed = !0u128; // bitmask of conceivable factor degrees
    let mut prime_index = 0usize;
    let mut primes = first_primes(64);
    while usable.len() < SIEVE_PRIME_BUDGET {
        if prime_index >= primes.len() {
            if primes.len() > 4096 {
                break; // unreachable for squarefree f; stay defensive
            }
            primes = first_primes(primes.len() * 2);
        }
        let p = primes[prime_index];
        prime_index += 1;
        let fp = ResiduePoly::from_int_poly(f, p);
        if fp.degree() != Some(n) {
            continue; // p divides the leading coefficient (monic: impossible)
        }
        if fp.gcd(&fp.derivative()).degree() != Some(0) {
            continue; // not squarefree mod p
        }
        let pattern = modpoly::factor_degree_pattern(&fp)
            .expect("prime modulus")
            .degrees()
            .to_vec();
        if pattern.len() == 1 {
            return true; // irreducible mod p certifies irreducibility
        }
        let mut mask = 1u128;
        for &d in &pattern {
            mask |= mask << d;
        }
        allowed &= mask;
        if allowed & !full == 0 {
            return true; // no proper factor degree survives the sieve
        }
        usable.push((p, fp, pattern));
    }

    // exact fallback: Hensel lifting at the prime with fewest modular factors
    let (p, fp, _) = usable
        .iter()
        .min_by_key(|(p, _, pattern)| (pattern.len(), *p))
        .expect("at least one usable prime exists for a squarefree polynomial")
        .clone();
    !zassenhaus_finds_factor(f, p, &fp, allowed)
}

/// True when some recombination of Hensel-lifted modular factors divides f.
fn zassenhaus_finds_factor(f: &IntPoly, p: u64, fp: &ResiduePoly, allowed: u128) -> bool {
    let n = f.deg();
    let leaves = modpoly::factor_squarefree_monic(fp).expect("prime modulus");
    let count = leaves.len();
    debug_assert!(count >= 2);

    // Landau-Mignotte: coefficients of any monic factor are bounded by
    // binom(n-1, floor((n-1)/2)) * ||f||_2
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let bound = binomial(n - 1, (n - 1) / 2) * norm;
    let target = BigInt::from(2) * &bound + BigInt::one();
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }

    let lifted = hensel_lift_tree(f, &leaves, p, &modulus);
    let degrees: Vec<usize> = lifted.iter().map(|g| g.deg()).collect();

    // subsets by size, smallest first; only degrees the sieve left open
    for size in 1..count {
        let mut mask: u128 = (1 << size) - 1;
        loop {
            let total: usize = (0..count)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| degrees[i])
                .sum();
            if total * 2 <= n && allowed >> total & 1 == 1 {
                let mut prod = IntPoly::one();
                for (i, g) in lifted.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        prod = poly_mul_mod(&prod, g, &modulus);
                    }
                }
                let candidate = symmetric_lift(&prod, &modulus);
                if candidate.coeffs().iter().all(|c| c.abs() <= bound)
                    && f.div_exact(&candidate).is_some()
                {
                    return true;
                }
            }
            // Gosper's hack: next subset of the same size
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r >= 1 << count {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    acc
}

/// Lift the modular factorization of monic f from mod p to the target
/// modulus (a power of p), by recursive two-way splits.
fn hensel_lift_tree(f: &IntPoly, leaves: &[ResiduePoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    let reduced = poly_reduce(f, modulus);
    lift_group(&reduced, leaves, p, modulus)
}

fn lift_group(f: &IntPoly, leaves: &[ResiduePoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if leaves.len() == 1 {
        return vec![f.clone()];
    }
    let mid = leaves.len() / 2;
    let (left, right) = leaves.split_at(mid);
    let g0 = left.iter().fold(ResiduePoly::one(p), |acc, g| acc.mul(g));
    let h0 = right.iter().fold(ResiduePoly::one(p), |acc, g| acc.mul(g));
    let (g, h) = hensel_pair(f, &g0, &h0, p, modulus);
    let mut out = lift_group(&g, left, p, modulus);
    out.extend(lift_group(&h, right, p, modulus));
    out
}

/// Quadratic Hensel lifting of a coprime pair g0 h0 = f mod p up to the
/// given power of p. Both factors are monic throughout.
fn hensel_pair(
    f: &IntPoly,
    g0: &ResiduePoly,
    h0: &ResiduePoly,
    p: u64,
    modulus: &BigInt,
) -> (IntPoly, IntPoly) {
    let (one, s0, t0) = modpoly::ext_gcd(g0, h0);
    debug_assert_eq!(one.degree(), Some(0));
    let mut m = BigInt::from(p);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut s = s0.lift();
    let mut t = t0.lift();
    while &m < modulus {
        let m2 = &m * &m;
        let e = poly_reduce(&(f - &(&g * &h)), &m2);
        let se = poly_mul_mod(&s, &e, &m2);
        let (q, r) = poly_divmod_monic(&se, &h, &m2);
        let te = poly_mul_mod(&t, &e, &m2);
        let qg = poly_mul_mod(&q, &g, &m2);
        let g_new = poly_reduce(&(&(&g + &te) + &qg), &m2);
        let h_new = poly_reduce(&(&h + &r), &m2);
        // refresh the Bezout pair
        let b = {
            let sg = poly_mul_mod(&s, &g_new, &m2);
            let th = poly_mul_mod(&t, &h_new, &m2);
            poly_reduce(&(&(&sg + &th) - &IntPoly::one()), &m2)
        };
        let sb = poly_mul_mod(&s, &b, &m2);
        let (c, d) = poly_divmod_monic(&sb, &h_new, &m2);
        let s_new = poly_reduce(&(&s - &d), &m2);
        let t_new = {
            let tb = poly_mul_mod(&t, &b, &m2);
            let cg = poly_mul_mod(&c, &g_new, &m2);
            poly_reduce(&(&(&t - &tb) - &cg), &m2)
        };
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (poly_reduce(&g, modulus), poly_reduce(&h, modulus))
}

/// Coefficients reduced into [0, m).
fn poly_reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn poly_mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    poly_reduce(&(a * b), m)
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn poly_divmod_monic(a: &IntPoly, div: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(div.is_monic());
    let dd = div.deg();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= dd {
        return (IntPoly::zero(), a.clone());
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..rem.len() - dd).rev() {
        let c = rem[k + dd].mod_floor(m);
        if !c.is_zero() {
            for (i, b) in div.coeffs().iter().enumerate() {
                let v = (&rem[k + i] - &c * b).mod_floor(m);
                rem[k + i] = v;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (
        IntPoly::new(quot.into_iter().map(|c| c.mod_floor(m)).collect()),
        IntPoly::new(rem),
    )
}

/// Map coefficients from [0, m) to (-m/2, m/2].
fn symmetric_lift(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / BigInt::from(2);
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}
