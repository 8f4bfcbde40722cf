//! Elementary number theory: prime-power recognition, phi, mu, prime lists.
//!
//! All primality answers are deterministic. Inputs are confined to the
//! 64-bit range, where a fixed Miller-Rabin witness set is a proven test;
//! anything larger is rejected up front rather than answered probabilistically.

use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::sync::{Mutex, OnceLock};

/// A validated prime power q = p^e with p prime and e >= 1.
///
/// Construction goes through [`PrimePower::parse`] (or [`PrimePower::from_u64`]),
/// which is the only way to obtain one, so downstream code may rely on the
/// factorization being correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    q: u64,
    p: u64,
    e: u32,
}

impl PrimePower {
    /// Recognize a prime power given as a decimal string of any length.
    ///
    /// Values of 2^64 or more are rejected: primality beyond that range
    /// cannot be certified deterministically here.
    pub fn parse(input: &str) -> Result<PrimePower> {
        let trimmed = input.trim();
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not a positive integer: {input:?}")));
        }
        let big: BigUint = trimmed
            .parse()
            .map_err(|_| Error::Parse(format!("not a positive integer: {input:?}")))?;
        match big.to_u64() {
            Some(q) => PrimePower::from_u64(q),
            None => Err(Error::InputTooLarge(trimmed.to_string())),
        }
    }

    /// Recognize a prime power in the 64-bit range.
    pub fn from_u64(q: u64) -> Result<PrimePower> {
        if q < 2 {
            return Err(Error::NotAPrimePower(q.to_string()));
        }
        // The largest e with q = r^e for integer r has r not itself a proper
        // power, so q is a prime power exactly when that base is prime.
        let mut base = q;
        let mut exp = 1u32;
        let max_e = 63 - q.leading_zeros(); // floor(log2 q), >= 1 for q >= 2
        for e in (2..=max_e.max(1)).rev() {
            let r = q.nth_root(e);
            if r.checked_pow(e).map_or(false, |v| v == q) {
                base = r;
                exp = e;
                break;
            }
        }
        if is_prime_u64(base) {
            Ok(PrimePower { q, p: base, e: exp })
        } else {
            Err(Error::NotAPrimePower(q.to_string()))
        }
    }

    /// The value q itself.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The prime base p.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The exponent e with q = p^e.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Euler's phi of q, i.e. q - q/p.
    pub fn phi(&self) -> u64 {
        self.q - self.q / self.p
    }

    /// The ratio phi(q)/q as an exact rational.
    pub fn ratio_phi(&self) -> BigRational {
        BigRational::new(self.phi().into(), self.q.into())
    }

    /// True if q is a perfect square (e even).
    pub fn is_square(&self) -> bool {
        self.e % 2 == 0
    }

    /// For square q, the exact integer square root.
    pub fn sqrt_exact(&self) -> Option<u64> {
        if self.is_square() {
            Some(self.p.pow(self.e / 2))
        } else {
            None
        }
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Deterministic primality for the full 64-bit range.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to be
/// exact for all n < 3.3 * 10^24, which covers u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi requires a positive argument");
    let mut phi = n;
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            phi -= phi / d;
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// The Moebius function: 0 on squareful n, otherwise (-1)^(number of prime factors).
pub fn moebius(n: u64) -> i32 {
    assert!(n > 0, "moebius requires a positive argument");
    let mut rest = n;
    let mut factors = 0u32;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            rest /= d;
            if rest % d == 0 {
                return 0;
            }
            factors += 1;
        }
        d += 1;
    }
    if rest > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

static PRIME_CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();

/// The first k primes, from a process-wide incrementally grown table.
pub fn first_primes(k: usize) -> Vec<u64> {
    let cache = PRIME_CACHE.get_or_init(|| Mutex::new(vec![2, 3, 5, 7, 11, 13]));
    let mut primes = cache.lock().expect("prime cache poisoned");
    let mut candidate = *primes.last().expect("cache never empty");
    while primes.len() < k {
        candidate += 2;
        let mut is_p = true;
        for &p in primes.iter() {
            if p * p > candidate {
                break;
            }
            if candidate % p == 0 {
                is_p = false;
                break;
            }
        }
        if is_p {
            primes.push(candidate);
        }
    }
    primes[..k].to_vec()
}

/// All prime powers q with lo <= q <= hi, in increasing order.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    for q in lo.max(2)..=hi {
        if let Ok(pp) = PrimePower::from_u64(q) {
            out.push(pp);
        }
    }
    out
}

/// Floor of the square root of a nonnegative i128.
pub fn isqrt_i128(n: i128) -> i128 {
    assert!(n >= 0);
    (n as u128).sqrt() as i128
}

/// True if the nonnegative integer is a perfect square.
pub fn is_perfect_square_i128(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let r = isqrt_i128(n);
    r * r == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn recognizes_prime_powers() {
        let pp = PrimePower::from_u64(8).unwrap();
        assert_eq!((pp.p(), pp.e()), (2, 3));
        let pp = PrimePower::from_u64(1024).unwrap();
        assert_eq!((pp.p(), pp.e()), (2, 10));
        let pp = PrimePower::from_u64(7).unwrap();
        assert_eq!((pp.p(), pp.e()), (7, 1));
        let pp = PrimePower::from_u64(9).unwrap();
        assert_eq!((pp.p(), pp.e()), (3, 2));
        let pp = PrimePower::from_u64(3u64.pow(20)).unwrap();
        assert_eq!((pp.p(), pp.e()), (3, 20));
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0u64, 1, 6, 12, 36, 100, 1000] {
            assert!(matches!(
                PrimePower::from_u64(q),
                Err(Error::NotAPrimePower(_))
            ));
        }
    }

    #[test]
    fn parse_handles_strings() {
        assert_eq!(PrimePower::parse("49").unwrap().p(), 7);
        assert_eq!(PrimePower::parse(" 1024 ").unwrap().e(), 10);
        assert!(matches!(
            PrimePower::parse("18446744073709551616"), // 2^64
            Err(Error::InputTooLarge(_))
        ));
        assert!(matches!(PrimePower::parse("12x"), Err(Error::Parse(_))));
        assert!(matches!(PrimePower::parse(""), Err(Error::Parse(_))));
        assert!(matches!(PrimePower::parse("-7"), Err(Error::Parse(_))));
    }

    #[test]
    fn primality_known_values() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(25326001)); // strong pseudoprime to 2, 3, 5
        assert!(is_prime_u64(2305843009213693951)); // 2^61 - 1
        assert!(!is_prime_u64(u64::MAX));
        assert!(is_prime_u64(18446744073709551557)); // largest u64 prime
    }

    #[test]
    fn phi_values_and_multiplicativity() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(euler_phi(1024), 512);
        for a in 1..=100u64 {
            for b in 1..=100u64 {
                if a.gcd(&b) == 1 {
                    assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
                }
            }
        }
    }

    #[test]
    fn phi_matches_prime_power_shortcut() {
        for q in 2..=2000u64 {
            if let Ok(pp) = PrimePower::from_u64(q) {
                assert_eq!(pp.phi(), euler_phi(q), "q = {q}");
            }
        }
    }

    #[test]
    fn moebius_values_and_dirichlet_identity() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        // sum over divisors of mu is the indicator of n = 1
        for n in 1..=500u64 {
            let total: i32 = (1..=n).filter(|d| n % d == 0).map(moebius).sum();
            assert_eq!(total, i32::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn first_primes_product_of_twelve() {
        let primes = first_primes(12);
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        let product: u64 = primes.iter().product();
        assert_eq!(product, 7_420_738_134_810);
        // table growth is monotone and consistent
        assert_eq!(first_primes(4), vec![2, 3, 5, 7]);
        assert_eq!(first_primes(20).len(), 20);
        assert_eq!(first_primes(20)[19], 71);
    }

    #[test]
    fn prime_power_list() {
        let list = prime_powers_in(2, 32);
        let values: Vec<u64> = list.iter().map(|p| p.q()).collect();
        assert_eq!(
            values,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }

    #[test]
    fn square_helpers() {
        assert!(is_perfect_square_i128(0));
        assert!(is_perfect_square_i128(144));
        assert!(!is_perfect_square_i128(145));
        assert!(!is_perfect_square_i128(-4));
        assert_eq!(isqrt_i128(10_000_000_001), 100_000);
        let pp = PrimePower::from_u64(49).unwrap();
        assert_eq!(pp.sqrt_exact(), Some(7));
        assert_eq!(PrimePower::from_u64(7).unwrap().sqrt_exact(), None);
    }
}
