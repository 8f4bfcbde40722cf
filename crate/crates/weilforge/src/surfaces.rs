//! Abelian surfaces: classification of simple ordinary isogeny classes by
//! their splitting behavior over extensions, exact enumeration for a fixed
//! field size, and census statistics compared against the density bounds.
//!
//! An isogeny class of abelian surfaces over F_q corresponds to a quartic
//! x^4 + a x^3 + b x^2 + a q x + q^2, so everything here works on the integer
//! pair (a, b).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{surface_bounds, RatRepr, SqrtBound, SqrtBoundRepr};
use crate::error::Error;
use crate::intpoly::IntPoly;
use crate::numth::{is_perfect_square_i128, isqrt_i128, PrimePower};
use crate::Result;

/// Coefficient pair (a, b) of the quartic x^4 + a x^3 + b x^2 + a q x + q^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceParams {
    pub a: i64,
    pub b: i64,
    pub q: PrimePower,
}

impl SurfaceParams {
    pub fn new(a: i64, b: i64, q: PrimePower) -> SurfaceParams {
        SurfaceParams { a, b, q }
    }

    /// The quartic itself.
    pub fn weil_poly(&self) -> IntPoly {
        let q = BigInt::from(self.q.q());
        IntPoly::new(vec![
            &q * &q,
            BigInt::from(self.a) * &q,
            BigInt::from(self.b),
            BigInt::from(self.a),
            BigInt::one(),
        ])
    }

    /// The degree-two companion x^2 + a x + (b - 2q) whose roots are the
    /// sums of each conjugate root pair of the quartic.
    pub fn real_companion(&self) -> IntPoly {
        IntPoly::new(vec![
            BigInt::from(self.b) - BigInt::from(2u32) * BigInt::from(self.q.q()),
            BigInt::from(self.a),
            BigInt::one(),
        ])
    }

    /// Exact test that the quartic has all roots of absolute value sqrt(q),
    /// i.e. that the companion quadratic is totally real with both roots in
    /// [-2 sqrt(q), 2 sqrt(q)].
    ///
    /// For g = x^2 + a x + (b - 2q) this comes down to four integer
    /// inequalities: a real discriminant (a^2 - 4b + 8q >= 0), non-negative
    /// values at both interval ends (b + 2q >= 2|a| sqrt(q), squared to
    /// (b+2q) >= 0 and (b+2q)^2 >= 4 a^2 q), and the vertex -a/2 inside the
    /// interval (a^2 <= 16 q). The vertex condition is not implied by the
    /// others: (a, b) = (-10, 27) at q = 2 passes the first three with both
    /// roots beyond the right endpoint.
    pub fn is_weil(&self) -> bool {
        let a = BigInt::from(self.a);
        let b = BigInt::from(self.b);
        let q = BigInt::from(self.q.q());
        let a2 = &a * &a;
        let disc = &a2 - BigInt::from(4u32) * &b + BigInt::from(8u32) * &q;
        if disc.sign() == num_bigint::Sign::Minus {
            return false;
        }
        let m = &b + BigInt::from(2u32) * &q;
        if m.sign() == num_bigint::Sign::Minus {
            return false;
        }
        if &m * &m < BigInt::from(4u32) * &a2 * &q {
            return false;
        }
        a2 <= BigInt::from(16u32) * &q
    }

    /// Ordinary means the middle coefficient b is coprime to q, i.e. not
    /// divisible by p.
    pub fn is_ordinary(&self) -> bool {
        self.b % self.q.p() as i64 != 0
    }

    /// For ordinary Weil parameters, the quartic factors over the rationals
    /// exactly when the companion discriminant a^2 - 4b + 8q is a perfect
    /// square: any factorization must pair the roots into two conjugate
    /// quadratics x^2 - t x + q with integer t, and those t are the integer
    /// roots of the companion. (Roots at +-sqrt(q) would force a boundary
    /// case that ordinarity excludes.)
    fn companion_disc_is_square(&self) -> bool {
        let a = self.a as i128;
        let b = self.b as i128;
        let q = self.q.q() as i128;
        is_perfect_square_i128(a * a - 4 * b + 8 * q)
    }
}

/// How a simple ordinary isogeny class behaves over field extensions: either
/// it stays simple over every extension, or it first becomes non-simple over
/// the extension of the named degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceClass {
    AbsolutelySimple,
    SplitsQuadratic,
    SplitsCubic,
    SplitsQuartic,
    SplitsSextic,
}

impl SurfaceClass {
    /// Degree of the smallest extension where the class stops being simple.
    pub fn splitting_degree(self) -> Option<usize> {
        match self {
            SurfaceClass::AbsolutelySimple => None,
            SurfaceClass::SplitsQuadratic => Some(2),
            SurfaceClass::SplitsCubic => Some(3),
            SurfaceClass::SplitsQuartic => Some(4),
            SurfaceClass::SplitsSextic => Some(6),
        }
    }

    /// Two-way label used by CSV rows and JSON objects.
    pub fn label(self) -> &'static str {
        match self {
            SurfaceClass::AbsolutelySimple => "abs_simple",
            _ => "splits",
        }
    }
}

/// Decides the splitting class of a simple ordinary surface from coefficient
/// arithmetic alone.
///
/// Preconditions are checked exactly and in order: the pair must give a Weil
/// polynomial (`NotWeil`), an ordinary one (`NotOrdinary`), and an irreducible
/// one (`NotSimple`). The four splitting cases are a = 0 (degree 2),
/// a^2 = q + b (degree 3), a^2 = 2b (degree 4), a^2 = 3b - 3q (degree 6);
/// for ordinary input at most one can hold.
pub fn classify_surface(s: &SurfaceParams) -> Result<SurfaceClass> {
    let (a, b, q) = (s.a, s.b, s.q.q());
    if !s.is_weil() {
        return Err(Error::NotWeil { a, b, q });
    }
    if !s.is_ordinary() {
        return Err(Error::NotOrdinary { a, b, q });
    }
    if s.companion_disc_is_square() {
        return Err(Error::NotSimple { a, b, q });
    }
    Ok(splitting_case(a as i128, b as i128, q as i128))
}

/// The case test shared by the classifier and the census loop. Inputs must
/// already be known to be simple and ordinary.
fn splitting_case(a: i128, b: i128, q: i128) -> SurfaceClass {
    let a2 = a * a;
    let class = if a == 0 {
        SurfaceClass::SplitsQuadratic
    } else if a2 == q + b {
        SurfaceClass::SplitsCubic
    } else if a2 == 2 * b {
        SurfaceClass::SplitsQuartic
    } else if a2 == 3 * b - 3 * q {
        SurfaceClass::SplitsSextic
    } else {
        SurfaceClass::AbsolutelySimple
    };
    debug_assert!(
        {
            let hits = [a == 0, a2 == q + b, a2 == 2 * b, a2 == 3 * b - 3 * q]
                .iter()
                .filter(|&&h| h)
                .count();
            hits <= 1
        },
        "splitting cases must be mutually exclusive for ordinary input"
    );
    class
}

/// Number of ordinary elliptic isogeny classes over F_q: integers t with
/// t^2 < 4q and p not dividing t.
pub fn count_ordinary_elliptic(q: PrimePower) -> u64 {
    let p = q.p() as i128;
    let s = isqrt_i128(4 * q.q() as i128 - 1);
    let mut count = 0u64;
    for t in 1..=s {
        if t % p != 0 {
            count += 2; // t and -t
        }
    }
    count
}

/// Inclusive range of the cubic coefficient a.
pub fn a_range(q: PrimePower) -> (i64, i64) {
    let s = isqrt_i128(16 * q.q() as i128) as i64;
    (-s, s)
}

/// Inclusive range of b for a fixed a, from the exact root-location
/// conditions; `None` when empty. The lower end is the least b with
/// (b + 2q)^2 >= 4 a^2 q and b + 2q >= 0, the upper end is floor((a^2+8q)/4).
pub fn b_range(q: PrimePower, a: i64) -> Option<(i64, i64)> {
    let a = a as i128;
    let q = q.q() as i128;
    if a * a > 16 * q {
        return None;
    }
    let hi = (a * a + 8 * q).div_euclid(4);
    let target = 4 * a * a * q;
    let mut m = isqrt_i128(target);
    if m * m < target {
        m += 1;
    }
    let lo = m - 2 * q;
    if lo > hi {
        return None;
    }
    Some((lo as i64, hi as i64))
}

/// Visits every simple ordinary pair with a in [a_lo, a_hi], in ascending
/// (a, b) order, passing along its splitting class.
///
/// Disjoint a-intervals cover disjoint sets of pairs, so partitioned runs can
/// be merged without coordination.
pub fn visit_ordinary_simple(
    q: PrimePower,
    a_lo: i64,
    a_hi: i64,
    mut visit: impl FnMut(i64, i64, SurfaceClass),
) {
    let p = q.p() as i128;
    let qq = q.q() as i128;
    for a in a_lo..=a_hi {
        let Some((b_lo, b_hi)) = b_range(q, a) else {
            continue;
        };
        let aa = a as i128;
        for b in b_lo..=b_hi {
            let bb = b as i128;
            if bb % p == 0 {
                continue; // not ordinary
            }
            if is_perfect_square_i128(aa * aa - 4 * bb + 8 * qq) {
                continue; // reducible
            }
            visit(a, b, splitting_case(aa, bb, qq));
        }
    }
}

/// All simple ordinary pairs for this q, ascending in (a, b).
pub fn enumerate_ordinary_simple_surfaces(q: PrimePower) -> Vec<SurfaceParams> {
    let (lo, hi) = a_range(q);
    let mut out = Vec::new();
    visit_ordinary_simple(q, lo, hi, |a, b, _| out.push(SurfaceParams::new(a, b, q)));
    out
}

/// Mergeable census tallies for a sub-range of a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub simple_ordinary: u64,
    pub abs_simple_ordinary: u64,
    /// Keyed by splitting degree; all four keys always present.
    pub split_by_degree: BTreeMap<u8, u64>,
    /// Simple but not absolutely simple classes with a != 0; the density
    /// argument needs these to be rare.
    pub non_abs_simple_a_nonzero: u64,
}

impl CensusCounts {
    pub fn empty() -> CensusCounts {
        CensusCounts {
            simple_ordinary: 0,
            abs_simple_ordinary: 0,
            split_by_degree: [(2u8, 0u64), (3, 0), (4, 0), (6, 0)].into_iter().collect(),
            non_abs_simple_a_nonzero: 0,
        }
    }

    /// Tallies one simple ordinary class. The a value only matters for the
    /// nonzero-trace side count.
    pub fn record(&mut self, a: i64, class: SurfaceClass) {
        self.simple_ordinary += 1;
        match class.splitting_degree() {
            None => self.abs_simple_ordinary += 1,
            Some(d) => {
                *self.split_by_degree.get_mut(&(d as u8)).expect("fixed keys") += 1;
                if a != 0 {
                    self.non_abs_simple_a_nonzero += 1;
                }
            }
        }
    }

    /// Adds another partition's tallies into this one. Merging is associative
    /// and commutative, so any partition of the a-range gives the same total.
    pub fn absorb(&mut self, other: &CensusCounts) {
        self.simple_ordinary += other.simple_ordinary;
        self.abs_simple_ordinary += other.abs_simple_ordinary;
        for (d, c) in &other.split_by_degree {
            *self.split_by_degree.get_mut(d).expect("fixed keys") += c;
        }
        self.non_abs_simple_a_nonzero += other.non_abs_simple_a_nonzero;
    }
}

/// Tallies the simple ordinary classes with a in [a_lo, a_hi].
pub fn census_partition(q: PrimePower, a_lo: i64, a_hi: i64) -> CensusCounts {
    let mut counts = CensusCounts::empty();
    visit_ordinary_simple(q, a_lo, a_hi, |a, _, class| counts.record(a, class));
    counts
}

/// Comparison of exact census counts against the density bound formulas.
#[derive(Debug, Clone, Serialize)]
pub struct CensusBoundReport {
    pub i_upper: SqrtBoundRepr,
    pub o_simple_lower: SqrtBoundRepr,
    pub o_abs_simple_lower: SqrtBoundRepr,
    /// Whether each lower bound is positive at this q (below roughly 10^4 they
    /// are vacuous).
    pub simple_lower_positive: bool,
    pub abs_simple_lower_positive: bool,
    /// Exact count strictly above the corresponding lower bound.
    pub simple_exceeds_lower: bool,
    pub abs_simple_exceeds_lower: bool,
    /// reducible + simple ordinary together stay at or below the overall
    /// upper bound.
    pub ordinary_within_upper: bool,
    /// Count of splitting classes with a != 0 is at most 15 sqrt(q).
    pub split_a_nonzero_within_15_sqrt_q: bool,
}

/// Full census of ordinary isogeny classes of abelian surfaces over F_q.
#[derive(Debug, Clone, Serialize)]
pub struct SurfaceCensus {
    pub q: u64,
    /// E, the number of ordinary elliptic classes.
    pub elliptic_ordinary: u64,
    pub simple_ordinary: u64,
    pub abs_simple_ordinary: u64,
    pub split_by_degree: BTreeMap<u8, u64>,
    /// Ordinary classes that are products of two elliptic classes: one per
    /// unordered pair, E(E+1)/2.
    pub reducible_ordinary: u64,
    pub non_abs_simple_a_nonzero: u64,
    pub bound_report: CensusBoundReport,
}

/// Builds the census record from merged partition tallies.
pub fn assemble_census(q: PrimePower, counts: CensusCounts) -> SurfaceCensus {
    let elliptic = count_ordinary_elliptic(q);
    let reducible = elliptic * (elliptic + 1) / 2;
    let bounds = surface_bounds(q);
    let qv = q.q();
    let simple = BigInt::from(counts.simple_ordinary);
    let abs_simple = BigInt::from(counts.abs_simple_ordinary);
    let ordinary_total = BigInt::from(reducible) + &simple;
    let split_nonzero = counts.non_abs_simple_a_nonzero;

    let repr = |b: &SqrtBound| SqrtBoundRepr {
        q_coeff: RatRepr::from(&b.q_coeff),
        sqrt_q_coeff: RatRepr::from(&b.sqrt_q_coeff),
        approx: b.approx(qv, 3),
    };
    let report = CensusBoundReport {
        i_upper: repr(&bounds.i_upper),
        o_simple_lower: repr(&bounds.o_simple_lower),
        o_abs_simple_lower: repr(&bounds.o_abs_simple_lower),
        simple_lower_positive: bounds.o_simple_lower.is_positive(qv),
        abs_simple_lower_positive: bounds.o_abs_simple_lower.is_positive(qv),
        simple_exceeds_lower: bounds.o_simple_lower.compare_count(&simple, qv)
            == std::cmp::Ordering::Greater,
        abs_simple_exceeds_lower: bounds.o_abs_simple_lower.compare_count(&abs_simple, qv)
            == std::cmp::Ordering::Greater,
        ordinary_within_upper: bounds.i_upper.compare_count(&ordinary_total, qv)
            != std::cmp::Ordering::Greater,
        split_a_nonzero_within_15_sqrt_q: (split_nonzero as u128).pow(2) <= 225 * qv as u128,
    };

    SurfaceCensus {
        q: qv,
        elliptic_ordinary: elliptic,
        simple_ordinary: counts.simple_ordinary,
        abs_simple_ordinary: counts.abs_simple_ordinary,
        split_by_degree: counts.split_by_degree,
        reducible_ordinary: reducible,
        non_abs_simple_a_nonzero: counts.non_abs_simple_a_nonzero,
        bound_report: report,
    }
}

/// Runs the whole census single-threaded.
pub fn surface_census(q: PrimePower) -> SurfaceCensus {
    let (lo, hi) = a_range(q);
    assemble_census(q, census_partition(q, lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::is_irreducible_over_rationals;
    use crate::weilcore::{self, SimplicityVerdict, WeilPoly};

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_u64(q).unwrap()
    }

    fn classify(a: i64, b: i64, q: u64) -> Result<SurfaceClass> {
        classify_surface(&SurfaceParams::new(a, b, pp(q)))
    }

    #[test]
    fn known_classifications() {
        for q in [2, 3, 5, 7, 101, 1024] {
            assert_eq!(classify(1, 1, q).unwrap(), SurfaceClass::AbsolutelySimple);
        }
        assert_eq!(classify(0, 1, 3).unwrap(), SurfaceClass::SplitsQuadratic);
        assert_eq!(classify(2, 1, 3).unwrap(), SurfaceClass::SplitsCubic);
        assert_eq!(classify(2, 2, 3).unwrap(), SurfaceClass::SplitsQuartic);
        assert_eq!(classify(3, 8, 5).unwrap(), SurfaceClass::SplitsSextic);
    }

    #[test]
    fn classifier_checks_preconditions_in_order() {
        assert_eq!(
            classify(0, 19, 3),
            Err(Error::NotWeil { a: 0, b: 19, q: 3 })
        );
        // Passes the discriminant and endpoint conditions but both companion
        // roots sit beyond 2*sqrt(2); the vertex condition must catch it.
        assert_eq!(
            classify(-10, 27, 2),
            Err(Error::NotWeil { a: -10, b: 27, q: 2 })
        );
        assert_eq!(
            classify(1, 3, 3),
            Err(Error::NotOrdinary { a: 1, b: 3, q: 3 })
        );
        // x^4 + 2x^2 + 9 = (x^2 - 2x + 3)(x^2 + 2x + 3).
        assert_eq!(classify(0, 2, 3), Err(Error::NotSimple { a: 0, b: 2, q: 3 }));
        // Product of the elliptic classes with traces 1 and 2 over F_3.
        assert_eq!(
            classify(-3, 8, 3),
            Err(Error::NotSimple { a: -3, b: 8, q: 3 })
        );
    }

    #[test]
    fn weil_predicate_matches_the_sturm_based_one() {
        for q in [2u64, 3, 5, 9] {
            let q = pp(q);
            for a in -15..=15 {
                for b in -25..=40 {
                    let s = SurfaceParams::new(a, b, q);
                    let got = s.is_weil();
                    let expected = weilcore::is_real_weil(&s.real_companion(), q);
                    assert_eq!(got, expected, "(a, b, q) = ({a}, {b}, {})", q.q());
                }
            }
        }
    }

    #[test]
    fn elliptic_counts() {
        assert_eq!(count_ordinary_elliptic(pp(2)), 2);
        assert_eq!(count_ordinary_elliptic(pp(4)), 4);
        assert_eq!(count_ordinary_elliptic(pp(5)), 8);
        for q in crate::numth::prime_powers_in(2, 500) {
            let e = count_ordinary_elliptic(q) as u128;
            assert!(e * e <= 16 * q.q() as u128);
        }
    }

    #[test]
    fn b_range_is_exact() {
        for q in [2u64, 3, 4, 5, 7, 9, 25] {
            let q = pp(q);
            let (a_lo, a_hi) = a_range(q);
            for a in (a_lo - 2)..=(a_hi + 2) {
                match b_range(q, a) {
                    None => {
                        for b in -30..60 {
                            assert!(!SurfaceParams::new(a, b, q).is_weil());
                        }
                    }
                    Some((lo, hi)) => {
                        assert!(SurfaceParams::new(a, lo, q).is_weil());
                        assert!(SurfaceParams::new(a, hi, q).is_weil());
                        assert!(!SurfaceParams::new(a, lo - 1, q).is_weil());
                        assert!(!SurfaceParams::new(a, hi + 1, q).is_weil());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for qv in [2u64, 3, 5] {
            let q = pp(qv);
            let got: Vec<(i64, i64)> = enumerate_ordinary_simple_surfaces(q)
                .iter()
                .map(|s| (s.a, s.b))
                .collect();
            // Independent path: box search with the generic irreducibility
            // test instead of the discriminant shortcut.
            let mut expected = Vec::new();
            for a in -30..=30 {
                for b in -60..=60 {
                    let s = SurfaceParams::new(a, b, q);
                    if s.is_weil() && s.is_ordinary() && is_irreducible_over_rationals(&s.weil_poly())
                    {
                        expected.push((a, b));
                    }
                }
            }
            assert_eq!(got, expected, "q = {qv}");
            // Ascending (a, b) order.
            let mut sorted = got.clone();
            sorted.sort();
            assert_eq!(got, sorted);
        }
    }

    #[test]
    fn enumeration_known_membership() {
        let q2: Vec<(i64, i64)> = enumerate_ordinary_simple_surfaces(pp(2))
            .iter()
            .map(|s| (s.a, s.b))
            .collect();
        assert!(q2.contains(&(1, 1)));
        assert!(q2.iter().all(|&(_, b)| b % 2 != 0));
        let q3: Vec<(i64, i64)> = enumerate_ordinary_simple_surfaces(pp(3))
            .iter()
            .map(|s| (s.a, s.b))
            .collect();
        assert!(!q3.contains(&(0, 2)));
        assert!(q3.contains(&(1, 1)));
    }

    #[test]
    fn classifier_agrees_with_subfield_degrees() {
        for qv in [2u64, 3, 4, 5] {
            let q = pp(qv);
            for s in enumerate_ordinary_simple_surfaces(q) {
                let class = classify_surface(&s).unwrap();
                let f = WeilPoly::new(s.weil_poly(), q).unwrap();
                let verdict = weilcore::absolute_simplicity(&f).unwrap();
                match class.splitting_degree() {
                    None => assert_eq!(
                        verdict,
                        SimplicityVerdict::AbsolutelySimple,
                        "(a, b, q) = ({}, {}, {qv})",
                        s.a,
                        s.b
                    ),
                    Some(d) => assert_eq!(
                        verdict,
                        SimplicityVerdict::SplitsAtDegree { degree: d },
                        "(a, b, q) = ({}, {}, {qv})",
                        s.a,
                        s.b
                    ),
                }
            }
        }
    }

    #[test]
    fn reducible_count_formula_matches_enumeration() {
        for qv in [2u64, 3, 5, 7] {
            let q = pp(qv);
            let e = count_ordinary_elliptic(q);
            let mut reducible = 0u64;
            let (a_lo, a_hi) = a_range(q);
            for a in a_lo..=a_hi {
                if let Some((b_lo, b_hi)) = b_range(q, a) {
                    for b in b_lo..=b_hi {
                        let s = SurfaceParams::new(a, b, q);
                        if s.is_ordinary() && s.companion_disc_is_square() {
                            reducible += 1;
                        }
                    }
                }
            }
            assert_eq!(reducible, e * (e + 1) / 2, "q = {qv}");
        }
    }

    #[test]
    fn census_partitions_merge_to_the_whole() {
        let q = pp(7);
        let (lo, hi) = a_range(q);
        let whole = census_partition(q, lo, hi);
        let mut merged = CensusCounts::empty();
        let mut start = lo;
        for cut in [lo + 3, lo + 4, hi - 2] {
            merged.absorb(&census_partition(q, start, cut));
            start = cut + 1;
        }
        merged.absorb(&census_partition(q, start, hi));
        assert_eq!(whole, merged);
    }

    #[test]
    fn census_internal_identities() {
        for qv in [2u64, 3, 5, 9, 101] {
            let census = surface_census(pp(qv));
            let split_total: u64 = census.split_by_degree.values().sum();
            assert_eq!(
                census.simple_ordinary,
                census.abs_simple_ordinary + split_total
            );
            assert_eq!(
                census.reducible_ordinary,
                census.elliptic_ordinary * (census.elliptic_ordinary + 1) / 2
            );
            assert!(census.bound_report.ordinary_within_upper, "q = {qv}");
            assert!(census.bound_report.split_a_nonzero_within_15_sqrt_q);
        }
    }

    #[test]
    fn census_quadratic_splits_are_the_a_zero_rows() {
        for qv in [3u64, 5, 7, 11] {
            let q = pp(qv);
            let census = surface_census(q);
            let mut a_zero = 0u64;
            visit_ordinary_simple(q, 0, 0, |_, _, class| {
                assert_eq!(class, SurfaceClass::SplitsQuadratic);
                a_zero += 1;
            });
            assert_eq!(census.split_by_degree[&2], a_zero, "q = {qv}");
        }
    }

    #[test]
    fn census_serialization_shape() {
        let census = surface_census(pp(3));
        let json = serde_json::to_value(&census).unwrap();
        assert_eq!(json["q"], 3);
        assert!(json["split_by_degree"].get("2").is_some());
        assert!(json["split_by_degree"].get("6").is_some());
        assert!(json["bound_report"]["i_upper"]["q_coeff"][0] == "3473");
        assert!(json["bound_report"].get("ordinary_within_upper").is_some());
    }

    #[test]
    fn class_labels() {
        assert_eq!(SurfaceClass::AbsolutelySimple.label(), "abs_simple");
        assert_eq!(SurfaceClass::SplitsSextic.label(), "splits");
        assert_eq!(SurfaceClass::SplitsQuadratic.splitting_degree(), Some(2));
        assert_eq!(SurfaceClass::AbsolutelySimple.splitting_degree(), None);
    }
}
