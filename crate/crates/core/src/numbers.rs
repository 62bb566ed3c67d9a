//! Parsing of exact rational inputs such as `-1/3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Parses `p`, `p/q` or `-p/q` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidNumber(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses a decimal such as `0.447` into the rational it denotes.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidNumber(s.to_string());
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{}{}", int, frac).parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

/// Accepts an exact rational, or a decimal when `allow_decimal` is set.
pub fn parse_number(s: &str, allow_decimal: bool) -> Result<BigRational> {
    match parse_rational(s) {
        Ok(r) => Ok(r),
        Err(e) if !allow_decimal => Err(e),
        Err(_) => parse_decimal(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-1/3").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn decimals_need_opt_in() {
        assert!(parse_number("0.25", false).is_err());
        assert_eq!(parse_number("0.25", true).unwrap(), rat(1, 4));
        assert_eq!(parse_number("-.5", true).unwrap(), rat(-1, 2));
        assert_eq!(parse_number("-1/3", true).unwrap(), rat(-1, 3));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal(".").is_err());
    }
}
