//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere on a decision path; `f64` appears only in the
//! diagnostic eigensolver of [`crate::spectral`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parse a rational from the wire format `"p"` or `"p/q"`.
///
/// Floats are rejected: exactness across the CLI boundary is part of the
/// contract, so `"0.5"` is an error while `"1/2"` is fine.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    if s.contains('.') || s.contains(['e', 'E']) {
        return Err(format!(
            "`{s}`: floating-point literals are not accepted; write an exact fraction p/q"
        ));
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|e| format!("`{s}`: {e}")),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| format!("`{s}`: {e}"))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| format!("`{s}`: {e}"))?;
            if q.is_zero() {
                return Err(format!("`{s}`: zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical wire format: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion to `f64` (diagnostic use only).
pub fn to_f64(r: &Rational) -> f64 {
    let num = bigint_to_f64(r.numer());
    let den = bigint_to_f64(r.denom());
    num / den
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // Good to ~1e15 magnitude, which covers every diagnostic use here.
    let s = n.to_string();
    s.parse::<f64>().unwrap_or(if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for s in ["0", "-7", "3/4", "-22/7", "1000000000000000000000/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_floats() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }
}
