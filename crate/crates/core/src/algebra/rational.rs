//! Arbitrary-precision rationals and their text forms.
//!
//! The scalar type is `num::BigRational`, which already maintains the
//! invariants we need: lowest terms after every operation and a strictly
//! positive denominator. Serialized form is `numerator/denominator` in
//! decimal digits (plain `numerator` when the denominator is one).

use num::bigint::Sign as IntSign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::AlgebraError;

pub type Rational = BigRational;

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| AlgebraError::ParseRational(s.to_string()))
}

/// Largest integer not exceeding `q`.
pub fn rat_floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Fixed-point decimal expansion of `q` with `places` fractional digits,
/// rounded half to even. ASCII, minus sign only when the rounded value is
/// nonzero and negative.
pub fn decimal_string(q: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let negative = q.is_negative();
    let num = q.numer().abs();
    let den = q.denom().clone();
    let (mut quot, rem) = (num * &scale).div_rem(&den);
    // round half to even on the magnitude (sign-symmetric)
    match (&rem * 2u32).cmp(&den) {
        std::cmp::Ordering::Less => {}
        std::cmp::Ordering::Greater => quot += 1u32,
        std::cmp::Ordering::Equal => {
            if quot.is_odd() {
                quot += 1u32;
            }
        }
    }
    let (int_part, frac_part) = quot.div_rem(&scale);
    let sign = if negative && !quot.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
    }
}

/// Sign of an exact rational as -1, 0, or 1.
pub fn rat_signum(q: &Rational) -> i8 {
    match q.numer().sign() {
        IntSign::Minus => -1,
        IntSign::NoSign => 0,
        IntSign::Plus => 1,
    }
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["36/5", "-3/2", "4", "0", "-7"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(q.to_string(), s);
            assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("one half").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_rounding_half_even() {
        assert_eq!(decimal_string(&rat(1, 8), 2), "0.12"); // 0.125 ties to even
        assert_eq!(decimal_string(&rat(3, 8), 2), "0.38"); // 0.375 ties to even
        assert_eq!(decimal_string(&rat(-1, 8), 2), "-0.12");
        assert_eq!(decimal_string(&rat(36, 5), 3), "7.200");
        assert_eq!(decimal_string(&rat(32, 3), 3), "10.667");
        assert_eq!(decimal_string(&rat(212, 15), 3), "14.133");
        assert_eq!(decimal_string(&rat(96, 7), 3), "13.714");
        assert_eq!(decimal_string(&rat(2, 1), 3), "2.000");
        assert_eq!(decimal_string(&rat(-1, 10000), 3), "0.000"); // no negative zero
    }

    #[test]
    fn floor_matches_integer_division() {
        assert_eq!(rat_floor(&rat(7, 2)), BigInt::from(3));
        assert_eq!(rat_floor(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(rat_floor(&rat(6, 3)), BigInt::from(2));
    }
}
