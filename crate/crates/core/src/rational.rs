//! Exact rationals.
//!
//! Values are `num_rational::BigRational`, which keeps numerator and
//! denominator in lowest terms with a positive denominator. Text form is
//! `a/b`, or `a` when the denominator is 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Renders `a/b`, or `a` for integers.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Format(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// True when the denominator is prime to `p`, i.e. `q` lies in Z_(p).
pub fn is_p_local_integer(q: &Rational, p: u64) -> bool {
    let p = BigInt::from(p);
    !q.denom().is_multiple_of(&p)
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format(&ratio(2, 6)), "1/3");
        assert_eq!(format(&ratio(6, 3)), "2");
        assert_eq!(format(&ratio(3, -6)), "-1/2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn p_locality() {
        assert!(is_p_local_integer(&ratio(2, 3), 2));
        assert!(!is_p_local_integer(&ratio(2, 3), 3));
        assert!(is_p_local_integer(&int(5), 5));
    }
}
