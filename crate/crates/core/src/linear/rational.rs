use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. The result is reduced with a positive
/// denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Malformed(format!("not a rational number: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Canonical `"p/q"` form; the denominator is always written.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        assert_eq!(parse_rational("6/-4").unwrap(), rational(-3, 2));
        assert_eq!(format_rational(&rational(6, -4)), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
