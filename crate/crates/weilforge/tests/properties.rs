//! Randomized cross-checks of the arithmetic kernel. Each block pits a
//! library routine against an independent reformulation of the same fact:
//! the expansion maps against raw coefficient symmetry, the Sturm realness
//! test against products with known integer roots, rational irreducibility
//! against trial factorization, and modular factor patterns against point
//! evaluation and multiplicativity.

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

use weilforge::intpoly::{is_irreducible_over_rationals, power_charpoly, power_sums, IntPoly};
use weilforge::modpoly::{factor_degree_pattern, ResiduePoly};
use weilforge::numth::{euler_phi, PrimePower};
use weilforge::surfaces::{a_range, classify_surface, visit_ordinary_simple, SurfaceParams};
use weilforge::textio::{format_int_poly, format_residue_poly, parse_int_poly, parse_residue_poly};
use weilforge::weilcore::{
    candidate_exponents, is_real_weil, is_real_weil_strict, real_to_weil, weil_to_real,
};

fn pp(q: u64) -> PrimePower {
    PrimePower::parse(&q.to_string()).unwrap()
}

fn prime_power() -> impl Strategy<Value = PrimePower> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 101]).prop_map(pp)
}

/// Monic integer polynomial with the degree drawn from `degrees` and the
/// lower coefficients drawn from [-bound, bound].
fn monic_poly(
    degrees: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = IntPoly> {
    degrees.prop_flat_map(move |n| {
        vec(-bound..=bound, n).prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64(&c)
        })
    })
}

fn product_of_linear_factors(roots: &[i64]) -> IntPoly {
    let mut g = IntPoly::one();
    for &r in roots {
        g = &g * &IntPoly::from_i64(&[-r, 1]);
    }
    g
}

proptest! {
    /// Expanding a degree-n companion must give a monic degree-2n polynomial
    /// from which the companion can be recovered exactly.
    #[test]
    fn expansion_round_trips_through_its_inverse(
        g in monic_poly(1..=8, 100),
        q in prime_power(),
    ) {
        let f = real_to_weil(&g, q).unwrap();
        prop_assert!(f.is_monic());
        prop_assert_eq!(f.deg(), 2 * g.deg());
        prop_assert_eq!(weil_to_real(&f, q).unwrap(), g);
    }

    /// The expansion output always pairs coefficients across the middle:
    /// the coefficient of x^(n-i) equals q^i times the coefficient of
    /// x^(n+i).
    #[test]
    fn expansion_satisfies_coefficient_symmetry(
        g in monic_poly(1..=8, 100),
        q in prime_power(),
    ) {
        let n = g.deg();
        let f = real_to_weil(&g, q).unwrap();
        let qbig = BigInt::from(q.q());
        let mut qpow = BigInt::from(1u32);
        for i in 0..=n {
            prop_assert_eq!(f.coeff(n - i), f.coeff(n + i) * &qpow);
            qpow *= &qbig;
        }
    }

    /// For a product of linear factors with integer roots, the realness
    /// tests reduce to a bound on each root: r^2 <= 4q for the closed
    /// interval, r^2 < 4q for the open one. Repeated roots included.
    #[test]
    fn realness_agrees_with_explicit_roots(
        roots in vec(-6i64..=6, 1..=6),
        q in prime_power(),
    ) {
        let g = product_of_linear_factors(&roots);
        let four_q = 4 * q.q() as i64;
        let closed = roots.iter().all(|r| r * r <= four_q);
        let open = roots.iter().all(|r| r * r < four_q);
        prop_assert_eq!(is_real_weil(&g, q), closed);
        prop_assert_eq!(is_real_weil_strict(&g, q), open);
    }

    /// The degree-d norm construction multiplies each root's contribution to
    /// the k-th power sum into the (d k)-th power sum of the original.
    #[test]
    fn power_construction_strides_through_power_sums(
        f in monic_poly(1..=6, 9),
        d in 1usize..=5,
        count in 1usize..=6,
    ) {
        let fd = power_charpoly(&f, d);
        let coarse = power_sums(&fd, count);
        let fine = power_sums(&f, d * count);
        for k in 1..=count {
            prop_assert_eq!(&coarse[k - 1], &fine[d * k - 1]);
        }
    }

    /// Monic polynomials of degree at most four can be factor-tested by
    /// hand: integer roots handle any linear factor, and a quadratic times
    /// quadratic split leaves a small integer system. The general routine
    /// must agree with that finite search.
    #[test]
    fn low_degree_irreducibility_matches_trial_factorization(
        f in monic_poly(2..=4, 30),
    ) {
        prop_assert_eq!(
            is_irreducible_over_rationals(&f),
            naive_irreducible_monic(&f)
        );
    }

    /// Formatting then parsing an integer polynomial is the identity, for
    /// any coefficient vector including empty and zero-padded ones.
    #[test]
    fn integer_polynomial_text_round_trips(coeffs in vec(-1_000_000i64..=1_000_000, 0..=20)) {
        let f = IntPoly::from_i64(&coeffs);
        prop_assert_eq!(parse_int_poly(&format_int_poly(&f)).unwrap(), f);
    }

    /// Same round trip for residue polynomials over an arbitrary modulus.
    #[test]
    fn residue_polynomial_text_round_trips(
        m in 2u64..=50,
        raw in vec(0u64..1_000_000, 0..=12),
    ) {
        let f = ResiduePoly::new(m, raw);
        prop_assert_eq!(parse_residue_poly(&format_residue_poly(&f)).unwrap(), f);
    }

    /// Factor degree patterns over a prime field partition the degree, have
    /// a linear part exactly when the polynomial has a root in the field,
    /// and combine multiset-wise under multiplication.
    #[test]
    fn factor_patterns_partition_evaluate_and_multiply(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        left_raw in vec(0u64..7, 1..=5),
        right_raw in vec(0u64..7, 1..=4),
    ) {
        let monic = |mut c: Vec<u64>| {
            c.push(1);
            c
        };
        let left = ResiduePoly::new(p, monic(left_raw));
        let right = ResiduePoly::new(p, monic(right_raw));

        let lp = factor_degree_pattern(&left).unwrap();
        prop_assert_eq!(lp.degrees().iter().sum::<usize>(), left.deg());
        prop_assert!(lp.degrees().iter().all(|&d| d >= 1));
        prop_assert!(lp.degrees().windows(2).all(|w| w[0] <= w[1]));

        let has_root = (0..p).any(|x| left.eval(x) == 0);
        prop_assert_eq!(lp.degrees().contains(&1), has_root);

        let rp = factor_degree_pattern(&right).unwrap();
        let mut merged: Vec<usize> = lp
            .degrees()
            .iter()
            .chain(rp.degrees())
            .copied()
            .collect();
        merged.sort_unstable();
        let product = factor_degree_pattern(&left.mul(&right)).unwrap();
        prop_assert_eq!(product.degrees(), merged.as_slice());
    }

    /// Splitting an a-interval anywhere and visiting the two halves yields
    /// the same surface stream as one pass, and every emitted triple is
    /// confirmed by the standalone classifier.
    #[test]
    fn surface_visits_merge_across_any_cut(
        q in prop::sample::select(vec![3u64, 4, 5, 7, 9, 11, 13]),
        cut_seed in 0usize..1000,
    ) {
        let q = pp(q);
        let (lo, hi) = a_range(q);
        let cut = lo + (cut_seed as i64) % (hi - lo + 1);

        let collect = |a_lo, a_hi| {
            let mut out = Vec::new();
            visit_ordinary_simple(q, a_lo, a_hi, |a, b, class| out.push((a, b, class)));
            out
        };
        let mut split = collect(lo, cut);
        split.extend(collect(cut + 1, hi));
        let whole = collect(lo, hi);
        prop_assert_eq!(&split, &whole);

        for &(a, b, class) in &whole {
            let direct = classify_surface(&SurfaceParams::new(a, b, q)).unwrap();
            prop_assert_eq!(direct, class);
        }
    }
}

/// Trial-factorization irreducibility for monic integer polynomials of
/// degree 2 to 4, written against the structure of the possible splits
/// rather than any general machinery. Degree 2 and 3 reduce over the
/// rationals exactly when they have an integer root (Gauss); degree 4 may
/// also split into two monic integer quadratics.
fn naive_irreducible_monic(f: &IntPoly) -> bool {
    let n = f.deg();
    assert!((2..=4).contains(&n) && f.is_monic());
    let c: Vec<i128> = (0..=n)
        .map(|i| i128::try_from(f.coeff(i)).unwrap())
        .collect();

    if c[0] == 0 {
        return false; // root at 0
    }
    let eval = |x: i128| -> i128 {
        let mut acc = 0i128;
        for &ci in c.iter().rev() {
            acc = acc * x + ci;
        }
        acc
    };
    let limit = c[0].abs();
    for d in 1..=limit {
        if limit % d == 0 && (eval(d) == 0 || eval(-d) == 0) {
            return false;
        }
    }
    if n < 4 {
        return true;
    }

    // (x^2 + u x + v)(x^2 + w x + z) with v z = c0, u + w = c3,
    // u w = c2 - v - z, and the cross term u z + v w = c1.
    let c0 = c[0];
    for v in -limit..=limit {
        if v == 0 || c0 % v != 0 {
            continue;
        }
        let z = c0 / v;
        let sum = c[3];
        let prod = c[2] - v - z;
        let disc = sum * sum - 4 * prod;
        if disc < 0 {
            continue;
        }
        let s = integer_sqrt(disc);
        if s * s != disc || (sum + s) % 2 != 0 {
            continue;
        }
        let u = (sum + s) / 2;
        let w = sum - u;
        if u * z + v * w == c[1] {
            return false;
        }
    }
    true
}

fn integer_sqrt(n: i128) -> i128 {
    assert!(n >= 0);
    let mut s = (n as f64).sqrt() as i128;
    while s > 0 && s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

/// The listed exponents are exactly the d in [2, 8n^2] dividing 2n or whose
/// totient divides 2n, checked against the raw predicate for every n up
/// to 12.
#[test]
fn candidate_exponents_match_their_defining_predicate() {
    for n in 1usize..=12 {
        let listed = candidate_exponents(n);
        assert!(listed.windows(2).all(|w| w[0] < w[1]), "ascending, distinct");
        let member: std::collections::BTreeSet<usize> = listed.into_iter().collect();
        let two_n = 2 * n as u64;
        for d in 0..=(8 * n * n + 5) {
            let expected = d >= 2
                && d <= 8 * n * n
                && (two_n % d as u64 == 0 || two_n % euler_phi(d as u64) == 0);
            assert_eq!(
                member.contains(&d),
                expected,
                "exponent {d} at dimension {n}"
            );
        }
    }
}

/// A handful of frozen irreducibility verdicts guard the naive oracle
/// itself, so the proptest comparison cannot drift into testing agreement
/// between two wrong answers.
#[test]
fn trial_factorization_oracle_spot_checks() {
    let irreducible = [
        vec![1, 1, 1],          // x^2 + x + 1
        vec![2, 0, 0, 1],       // x^3 + 2
        vec![1, 0, 0, 0, 1],    // x^4 + 1
        vec![4, 4, 0, -4, 1],   // x^4 - 4x^3 + 4x + 4
        vec![-2, 0, 0, 0, 1],   // x^4 - 2
    ];
    let reducible = [
        vec![-1, 0, 1],         // (x-1)(x+1)
        vec![0, 1, 1],          // rejected root at 0 shape: x^2 + x
        vec![-8, 0, 0, 1],      // (x-2)(x^2+2x+4)
        vec![4, 0, 4, 0, 1],    // (x^2+2)^2
        vec![1, 2, 3, 2, 1],    // (x^2+x+1)^2
        vec![-4, 0, 0, 0, 1],   // (x^2-2)(x^2+2)
    ];
    for coeffs in irreducible {
        let f = IntPoly::from_i64(&coeffs);
        assert!(naive_irreducible_monic(&f), "{coeffs:?}");
        assert!(is_irreducible_over_rationals(&f), "{coeffs:?}");
    }
    for coeffs in reducible {
        let f = IntPoly::from_i64(&coeffs);
        assert!(!naive_irreducible_monic(&f), "{coeffs:?}");
        assert!(!is_irreducible_over_rationals(&f), "{coeffs:?}");
    }
}

/// The zero polynomial and bare constants survive the text round trip too.
#[test]
fn degenerate_polynomial_texts_round_trip() {
    for poly in [IntPoly::zero(), IntPoly::from_i64(&[-7]), IntPoly::from_i64(&[0, 0, 0])] {
        assert_eq!(parse_int_poly(&format_int_poly(&poly)).unwrap(), poly);
    }
    let zero = ResiduePoly::new(5, vec![]);
    assert_eq!(parse_residue_poly(&format_residue_poly(&zero)).unwrap(), zero);
}
