//! Human-readable element syntax: decimal integers and `x^2 - 9`-style
//! polynomials. Files use coefficient arrays instead; this syntax is for
//! the command line and for rendering.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::ring::{poly, RingDescriptor, RingValue};
use crate::Result;

/// Renders ascending coefficients as descending-power text, e.g.
/// `[−9, 0, 1]` as `x^2 - 9`.
pub fn render_poly(coeffs: &[BigInt], var: &str) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (power, coeff) in coeffs.iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let magnitude = coeff.abs();
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_coeff = power == 0 || !magnitude.is_one();
        if show_coeff {
            out.push_str(&magnitude.to_string());
        }
        match power {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&power.to_string());
            }
        }
    }
    out
}

/// Parses an element literal in the given ring: a decimal integer for `Z`
/// and `Z/mZ` (residues are reduced), or a sum of `c`, `c*x^k`, `x^k`
/// terms for `Z[x]`.
pub fn parse_element(ring: &RingDescriptor, input: &str) -> Result<RingValue> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty element literal".into()));
    }
    match ring {
        RingDescriptor::Integers | RingDescriptor::IntegersMod { .. } => {
            let value: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer `{s}`")))?;
            Ok(RingValue::from_integer(ring, value))
        }
        RingDescriptor::IntegerPolynomials { variable } => {
            let coeffs = parse_poly(s, variable)?;
            Ok(RingValue::polynomial(variable.clone(), coeffs))
        }
    }
}

fn parse_poly(s: &str, var: &str) -> Result<Vec<BigInt>> {
    // Whitespace may surround operators but not split a token in two.
    let chars: Vec<char> = s.trim().chars().collect();
    for (i, c) in chars.iter().enumerate() {
        if c.is_whitespace() {
            let before = chars[..i].iter().rev().find(|c| !c.is_whitespace());
            let after = chars[i..].iter().find(|c| !c.is_whitespace());
            if let (Some(b), Some(a)) = (before, after) {
                if b.is_ascii_alphanumeric() && a.is_ascii_alphanumeric() {
                    return Err(Error::Parse(format!(
                        "unexpected whitespace inside a term in `{s}`"
                    )));
                }
            }
        }
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (sign, after_sign) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if first => (1, rest),
            _ => {
                return Err(Error::Parse(format!(
                    "expected `+` or `-` before `{rest}` in `{s}`"
                )))
            }
        };
        first = false;
        let term_len = after_sign
            .find(['+', '-'])
            .unwrap_or(after_sign.len());
        if term_len == 0 {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        let term = &after_sign[..term_len];
        rest = &after_sign[term_len..];
        let (coeff, power) = parse_term(term, var, s)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += BigInt::from(sign) * coeff;
    }
    Ok(poly::canonical(coeffs))
}

fn parse_term(term: &str, var: &str, whole: &str) -> Result<(BigInt, usize)> {
    let bad = || Error::Parse(format!("invalid term `{term}` in `{whole}`"));
    match term.find(|c: char| c.is_ascii_alphabetic()) {
        None => {
            let coeff: BigInt = term.parse().map_err(|_| bad())?;
            Ok((coeff, 0))
        }
        Some(split) => {
            let coeff_text = term[..split].strip_suffix('*').unwrap_or(&term[..split]);
            let coeff: BigInt = if coeff_text.is_empty() {
                BigInt::one()
            } else {
                coeff_text.parse().map_err(|_| bad())?
            };
            let var_part = &term[split..];
            let (name, power) = match var_part.find('^') {
                None => (var_part, 1usize),
                Some(caret) => {
                    let power: usize = var_part[caret + 1..].parse().map_err(|_| bad())?;
                    (&var_part[..caret], power)
                }
            };
            if name != var {
                return Err(Error::Parse(format!(
                    "unknown variable `{name}` in `{whole}` (ring variable is `{var}`)"
                )));
            }
            Ok((coeff, power))
        }
    }
}
