//! Plain-text encodings used at the tool boundary: integer polynomials as
//! comma-separated coefficient lists in ascending degree order, residue
//! polynomials with a trailing "mod m", and the one-line-per-degree format
//! for cached base-polynomial search results.
//!
//! Parsers here consume untrusted input (command lines, cache files, fuzz
//! corpora), so they validate shape and size before building anything and
//! never panic on bad bytes.

use crate::intpoly::IntPoly;
use crate::modpoly::ResiduePoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use std::str::FromStr;

/// Upper limit on the number of coefficients a text form may carry.
const MAX_COEFFS: usize = 65_536;
/// Upper limit on the digit count of a single coefficient.
const MAX_COEFF_DIGITS: usize = 20_000;

/// "c0,c1,...,cn" with ascending degrees; the zero polynomial prints as "0".
pub fn format_int_poly(f: &IntPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

/// Parses the comma-separated ascending coefficient form, e.g. "49,7,1,1,1"
/// for x^4 + x^3 + x^2 + 7x + 49. Trailing zero coefficients are dropped by
/// normalization, so re-rendering gives the canonical form.
pub fn parse_int_poly(s: &str) -> Result<IntPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty coefficient list".to_string()));
    }
    let mut coeffs = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::Parse("empty coefficient entry".to_string()));
        }
        if token.len() > MAX_COEFF_DIGITS {
            return Err(Error::InputTooLarge(format!(
                "coefficient with {} characters",
                token.len()
            )));
        }
        let c = BigInt::from_str(token)
            .map_err(|_| Error::Parse(format!("bad integer coefficient {token:?}")))?;
        coeffs.push(c);
        if coeffs.len() > MAX_COEFFS {
            return Err(Error::InputTooLarge(format!(
                "more than {MAX_COEFFS} coefficients"
            )));
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// "c0,c1,...,cn mod m" with each coefficient already reduced into [0, m).
pub fn format_residue_poly(f: &ResiduePoly) -> String {
    let coeffs = if f.is_zero() {
        "0".to_string()
    } else {
        f.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<String>>()
            .join(",")
    };
    format!("{coeffs} mod {}", f.modulus())
}

/// Parses the "coeffs mod m" form. The modulus must be at least 2 and every
/// coefficient must already lie in [0, m); out-of-range values are rejected
/// rather than silently reduced, keeping the format canonical.
pub fn parse_residue_poly(s: &str) -> Result<ResiduePoly> {
    let s = s.trim();
    let (coeff_part, mod_part) = s
        .rsplit_once(" mod ")
        .ok_or_else(|| Error::Parse("expected \"coeffs mod m\"".to_string()))?;
    let modulus: u64 = mod_part
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad modulus {:?}", mod_part.trim())))?;
    if modulus < 2 {
        return Err(Error::Parse(format!("modulus {modulus} must be at least 2")));
    }
    let coeff_part = coeff_part.trim();
    if coeff_part.is_empty() {
        return Err(Error::Parse("empty coefficient list".to_string()));
    }
    let mut coeffs = Vec::new();
    for token in coeff_part.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::Parse("empty coefficient entry".to_string()));
        }
        let c: u64 = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue coefficient {token:?}")))?;
        if c >= modulus {
            return Err(Error::Parse(format!(
                "coefficient {c} not reduced modulo {modulus}"
            )));
        }
        coeffs.push(c);
        if coeffs.len() > MAX_COEFFS {
            return Err(Error::InputTooLarge(format!(
                "more than {MAX_COEFFS} coefficients"
            )));
        }
    }
    Ok(ResiduePoly::new(modulus, coeffs))
}

/// Renders one cache line: the degree, the mod-2 coefficients, and the mod-3
/// coefficients, space separated, coefficients ascending and comma joined.
pub fn format_base_cache_line(n: usize, g2: &ResiduePoly, g3: &ResiduePoly) -> String {
    let digits = |f: &ResiduePoly| {
        f.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<String>>()
            .join(",")
    };
    format!("{n} {} {}", digits(g2), digits(g3))
}

/// Maximum degree accepted from a cache line.
const MAX_CACHE_DEGREE: usize = 4_096;

/// Parses one cache line into (n, g2 over Z/2, g3 over Z/3). Both
/// polynomials must be monic of degree exactly n with canonical digits; the
/// caller is expected to re-verify the mathematical properties before
/// trusting the pair.
pub fn parse_base_cache_line(line: &str) -> Result<(usize, ResiduePoly, ResiduePoly)> {
    let mut fields = line.split_whitespace();
    let (Some(n_field), Some(g2_field), Some(g3_field), None) =
        (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        return Err(Error::Parse(
            "cache line needs exactly three fields".to_string(),
        ));
    };
    let n: usize = n_field
        .parse()
        .map_err(|_| Error::Parse(format!("bad degree {n_field:?}")))?;
    if n < 3 || n > MAX_CACHE_DEGREE {
        return Err(Error::Parse(format!("degree {n} out of range")));
    }
    let parse_digits = |field: &str, modulus: u64| -> Result<ResiduePoly> {
        let mut coeffs = Vec::with_capacity(n + 1);
        for token in field.split(',') {
            let c: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad digit {token:?}")))?;
            if c >= modulus {
                return Err(Error::Parse(format!("digit {c} not reduced mod {modulus}")));
            }
            coeffs.push(c);
            if coeffs.len() > n + 1 {
                return Err(Error::Parse("too many digits for the stated degree".into()));
            }
        }
        if coeffs.len() != n + 1 || coeffs.last() != Some(&1) {
            return Err(Error::Parse(format!(
                "expected a monic degree-{n} coefficient list"
            )));
        }
        Ok(ResiduePoly::new(modulus, coeffs))
    };
    let g2 = parse_digits(g2_field, 2)?;
    let g3 = parse_digits(g3_field, 3)?;
    Ok((n, g2, g3))
}
