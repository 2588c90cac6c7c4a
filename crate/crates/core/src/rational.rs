//! Exact rational values and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{NflError, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Formats as `"p/q"`, always with an explicit denominator.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"`.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(NflError::Parse("empty rational".into()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| NflError::Parse(format!("bad numerator in `{t}`")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| NflError::Parse(format!("bad denominator in `{t}`")))?;
        if d.is_zero() {
            return Err(NflError::Parse(format!("zero denominator in `{t}`")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(NflError::Parse(format!("bad decimal `{t}`")));
        }
        let mut n: BigInt = digits.parse().expect("checked digits");
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = t
        .parse()
        .map_err(|_| NflError::Parse(format!("bad rational `{t}`")))?;
    Ok(Rational::from_integer(n))
}

/// Absolute difference, the default cost metric.
pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_with_denominator() {
        assert_eq!(format(&int(3)), "3/1");
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert_eq!(parse("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse("1.5").unwrap(), ratio(3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }
}
