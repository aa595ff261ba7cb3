//! Exact rational helpers shared by every basis computation.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Returns the integer value of `q`, or an internal error naming `context`
/// when the denominator is not one.
pub fn expect_integer(q: &Rational, context: &str) -> Result<BigInt> {
    if q.denom().is_one() {
        Ok(q.numer().clone())
    } else {
        Err(Error::Internal(format!("{context}: expected an integer, found {q}")))
    }
}

/// `p` when the value is integral, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6"), Some(rat(-6)));
        assert_eq!(parse_rational("4/6"), Some(rat_frac(2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&rat_frac(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(12)), "12");
    }

    #[test]
    fn integrality() {
        assert_eq!(expect_integer(&rat(5), "t").unwrap(), BigInt::from(5));
        assert!(matches!(expect_integer(&rat_frac(1, 2), "t"), Err(Error::Internal(_))));
    }
}
