//! Parsers for complex and rational command-line values.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Pow};

use polar_legendre::scalar::{rational_to_f64, ExactComplex};

/// Exact rational from `p/q`, an integer, or a finite decimal such as
/// `-1.25e-3`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q == BigInt::from(0) {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = if shift >= 0 {
        ten.pow(shift)
    } else {
        BigRational::one() / ten.pow(-shift)
    };
    let value = BigRational::from_integer(all) * scale;
    Some(if neg { -value } else { value })
}

fn split_pair(s: &str) -> Result<(&str, &str), String> {
    s.split_once(',')
        .ok_or_else(|| format!("expected a complex value `re,im`, got `{s}`"))
}

/// `re,im` with binary64 components. Rational components are accepted and
/// rounded.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = split_pair(s)?;
    let part = |t: &str| -> Result<f64, String> {
        let t = t.trim();
        let v = match t.parse::<f64>() {
            Ok(v) => v,
            Err(_) => parse_rational(t)
                .map(|r| rational_to_f64(&r))
                .ok_or_else(|| format!("cannot parse `{t}` as a number"))?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("`{t}` is not finite"))
        }
    };
    Ok(Complex64::new(part(re)?, part(im)?))
}

/// `re,im` with exact rational components (`p/q` or finite decimals).
pub fn parse_exact_complex(s: &str) -> Result<ExactComplex, String> {
    let (re, im) = split_pair(s)?;
    let part = |t: &str| {
        parse_rational(t)
            .ok_or_else(|| format!("exact mode needs rational components, got `{}`", t.trim()))
    };
    Ok(Complex::new(part(re)?, part(im)?))
}

/// Comma-separated list of positive integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad list entry `{t}`"))
        })
        .collect()
}
