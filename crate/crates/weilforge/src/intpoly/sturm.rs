//! Exact real-root counting via Sturm chains.
//!
//! The chain is built with sign-corrected pseudo-remainders and primitive
//! reduction, so every entry stays in Z[x] while keeping the sign pattern of
//! the rational-arithmetic chain. Counts are for the half-open interval
//! (lo, hi]: a root exactly at `hi` is included, one at `lo` is not.

use super::{sign_of, IntPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Endpoint {
    /// Convenience constructor from an integer.
    pub fn int(v: i64) -> Endpoint {
        Endpoint::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    fn strictly_below(&self, other: &Endpoint) -> bool {
        match (self, other) {
            (Endpoint::NegInf, Endpoint::NegInf) => false,
            (Endpoint::NegInf, _) => true,
            (_, Endpoint::PosInf) => !matches!(self, Endpoint::PosInf),
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
            _ => false,
        }
    }
}

/// Number of distinct real roots of a squarefree `g` in (lo, hi].
///
/// Returns [`Error::NotSquarefree`] when gcd(g, g') is nonconstant; callers
/// that work with repeated roots should pass `g.squarefree_part()`.
pub fn sturm_count(g: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    let chain = SturmChain::new(g)?;
    Ok(chain.count(lo, hi))
}

pub(crate) struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub(crate) fn new(g: &IntPoly) -> Result<SturmChain> {
        if g.is_zero() {
            return Err(Error::InvalidDegree(0, "root counting needs a nonzero polynomial"));
        }
        if g.deg() >= 1 {
            let common = g.gcd_poly(&g.derivative());
            if let Some(d) = common.degree() {
                if d > 0 {
                    return Err(Error::NotSquarefree(d));
                }
            }
        }
        let mut polys = vec![g.primitive_part()];
        if g.deg() >= 1 {
            polys.push(g.derivative().primitive_part());
            loop {
                let prev = &polys[polys.len() - 2];
                let curr = &polys[polys.len() - 1];
                if curr.degree().is_none() {
                    break;
                }
                if prev.deg() < curr.deg() {
                    // cannot happen after the first step, but stay safe
                    break;
                }
                let (r, s) = prev.pseudo_rem(curr);
                if r.is_zero() {
                    break;
                }
                // next = -(positively scaled remainder)
                let next = if s > 0 { -&r } else { r };
                let next = next.primitive_part();
                polys.push(next.clone());
                if next.degree() == Some(0) {
                    break;
                }
            }
        }
        Ok(SturmChain { polys })
    }

    /// Sign changes of the chain at an endpoint, zeros dropped.
    fn changes_at(&self, at: &Endpoint) -> usize {
        let mut changes = 0usize;
        let mut last = 0i32;
        for p in &self.polys {
            let s = match at {
                Endpoint::Finite(x) => p.sign_at_rational(x),
                Endpoint::PosInf => sign_of(&p.leading()),
                Endpoint::NegInf => {
                    let s = sign_of(&p.leading());
                    if p.degree().map_or(0, |d| d) % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub(crate) fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        if !lo.strictly_below(hi) {
            return 0;
        }
        let a = self.changes_at(lo);
        let b = self.changes_at(hi);
        a.saturating_sub(b)
    }
}

/// All integer roots of a nonzero polynomial, ascending, without
/// multiplicity. Works through the squarefree part, so repeated roots are
/// reported once.
pub fn integer_roots(f: &IntPoly) -> Vec<BigInt> {
    assert!(!f.is_zero(), "integer roots of zero");
    if f.deg() == 0 {
        return Vec::new();
    }
    let sf = f.squarefree_part();
    if sf.deg() == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf).expect("squarefree by construction");
    let bound = sf.root_bound();
    let lo = -&bound - BigInt::one();
    let mut roots = Vec::new();
    bisect(&sf, &chain, lo, bound, &mut roots);
    roots.sort();
    roots
}

fn bisect(sf: &IntPoly, chain: &SturmChain, lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let lo_e = Endpoint::Finite(BigRational::from_integer(lo.clone()));
    let hi_e = Endpoint::Finite(BigRational::from_integer(hi.clone()));
    if chain.count(&lo_e, &hi_e) == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        // the only integer in (lo, hi] is hi itself
        if sf.eval_int(&hi).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid = (&lo + &hi).div_floor(&BigInt::from(2));
    bisect(sf, chain, lo, mid.clone(), out);
    bisect(sf, chain, mid, hi, out);
}
