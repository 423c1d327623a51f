//! Arbitrary-precision rationals and their string form.
//!
//! The string grammar is an optional `-`, decimal digits, and an optional
//! `/` followed by a nonzero decimal denominator. Values are always kept in
//! lowest terms with a positive denominator, which is what `num-rational`
//! already guarantees.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zeros(len: usize) -> Vec<Rational> {
    (0..len).map(|_| Rational::zero()).collect()
}

/// Parses the rational-string grammar. Leading `+`, whitespace and a zero
/// denominator are rejected.
pub fn parse(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num = BigInt::from_str(num).ok()?;
    let den = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            BigInt::from_str(d).ok()?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Lowest-terms string: `"p"` for integers, `"p/q"` otherwise.
pub fn format(value: &Rational) -> String {
    use alloc::string::ToString;
    value.to_string()
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn is_negative(value: &Rational) -> bool {
    value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_grammar() {
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("-3"), Some(int(-3)));
        assert_eq!(parse("2/4"), Some(frac(1, 2)));
        assert_eq!(parse("-6/3"), Some(int(-2)));
        assert_eq!(parse("0/7"), Some(zero()));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "-", "1/0", "+1", " 1", "1/", "/2", "1/-2", "1.5", "a", "1//2"] {
            assert_eq!(parse(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn format_is_lowest_terms() {
        assert_eq!(format(&frac(2, 4)), "1/2");
        assert_eq!(format(&frac(4, -2)), "-2");
        assert_eq!(format(&zero()), "0");
    }

    #[test]
    fn denominators() {
        let v = [frac(1, 4), frac(5, 6), int(3)];
        assert_eq!(common_denominator(&v), BigInt::from(12));
    }
}
