//! Newton power sums and the characteristic polynomial of d-th root powers.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Power sums p_1, ..., p_count of the roots of a monic polynomial,
/// from Newton's identities. All values are integers because the input is
/// monic with integer coefficients.
pub fn power_sums(f: &IntPoly, count: usize) -> Vec<BigInt> {
    assert!(f.is_monic(), "power sums need a monic polynomial");
    let m = f.deg();
    assert!(m >= 1, "power sums need degree at least 1");
    // a[j] is the coefficient of x^(m-j), so a[0] = 1
    let a: Vec<BigInt> = (0..=m).map(|j| f.coeff(m - j)).collect();
    let mut p: Vec<BigInt> = Vec::with_capacity(count + 1);
    p.push(BigInt::from(m as u64)); // p_0, unused below but keeps indices aligned
    for k in 1..=count {
        let mut sum = BigInt::zero();
        for j in 1..k.min(m + 1) {
            sum += &a[j] * &p[k - j];
        }
        if k <= m {
            sum += &a[k] * BigInt::from(k as u64);
        }
        p.push(-sum);
    }
    p.remove(0);
    p
}

/// Reconstruct the monic degree-m polynomial whose roots have the given
/// power sums p_1, ..., p_m. Panics if the sums are not consistent with an
/// integer polynomial: every intermediate division must be exact.
pub fn poly_from_power_sums(sums: &[BigInt], m: usize) -> IntPoly {
    assert!(sums.len() >= m, "need at least m power sums");
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    let mut e: Vec<BigInt> = Vec::with_capacity(m + 1);
    e.push(BigInt::one());
    for k in 1..=m {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let kk = BigInt::from(k as u64);
        let (q, r) = num_integer::Integer::div_rem(&acc, &kk);
        assert!(
            r.is_zero(),
            "power sums do not come from an integer polynomial (e_{k} not integral)"
        );
        e.push(q);
    }
    // f = x^m - e_1 x^(m-1) + e_2 x^(m-2) - ...
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for (k, ek) in e.iter().enumerate() {
        let c = if k % 2 == 0 { ek.clone() } else { -ek };
        coeffs[m - k] = c;
    }
    IntPoly::new(coeffs)
}

/// The characteristic polynomial of the d-th powers of the roots: for monic
/// f of degree m, returns the monic degree-m polynomial whose roots are
/// r^d for each root r of f (with multiplicity).
pub fn power_charpoly(f: &IntPoly, d: usize) -> IntPoly {
    assert!(f.is_monic(), "power_charpoly needs a monic polynomial");
    assert!(d >= 1, "power_charpoly needs d >= 1");
    let m = f.deg();
    if d == 1 {
        return f.clone();
    }
    let sums = power_sums(f, d * m);
    let dth: Vec<BigInt> = (1..=m).map(|j| sums[d * j - 1].clone()).collect();
    poly_from_power_sums(&dth, m)
}
