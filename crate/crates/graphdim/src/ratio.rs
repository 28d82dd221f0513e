//! Exact rational arithmetic for dimensions.
//!
//! Dimensions are non-integer rationals in general (e.g. 5/2), and the
//! denominators compound multiplicatively through the sphere recursion, so all
//! arithmetic is done on arbitrary-precision rationals. Floating point is used
//! only for display.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by the underlying representation. Equality is value equality.
pub type Rational = num_rational::BigRational;

/// Rational from a numerator/denominator pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Rational from an unsigned count.
pub fn rat_usize(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Canonical "p/q" string ("p" when the denominator is one).
pub fn format_exact(r: &Rational) -> String {
    r.to_string()
}

/// Parse the canonical "p/q" (or "p") form.
pub fn parse_exact(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}

/// Display-only decimal approximation with six significant digits.
pub fn format_decimal(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "0.00000".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_string_forms() {
        assert_eq!(format_exact(&rat(5, 2)), "5/2");
        assert_eq!(format_exact(&rat_int(-1)), "-1");
        assert_eq!(format_exact(&rat(6, 4)), "3/2");
        assert_eq!(parse_exact("7/5"), Some(rat(7, 5)));
        assert_eq!(parse_exact("3"), Some(rat_int(3)));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let sum = rat(1, 6) + rat(1, 3);
        assert_eq!(sum, rat(1, 2));
        let prod = rat(2, 3) * rat(3, 4);
        assert_eq!(prod, rat(1, 2));
    }

    #[test]
    fn decimal_display() {
        assert_eq!(format_decimal(&rat(5, 2)), "2.50000");
        assert_eq!(format_decimal(&rat_int(0)), "0.00000");
        assert_eq!(format_decimal(&rat(7, 5)), "1.40000");
    }

    proptest! {
        #[test]
        fn string_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = rat(n, d);
            prop_assert_eq!(parse_exact(&format_exact(&r)), Some(r));
        }

        #[test]
        fn order_matches_reals(a in -100i64..100, b in 1i64..100,
                               c in -100i64..100, d in 1i64..100) {
            let lhs = rat(a, b);
            let rhs = rat(c, d);
            let real = (a as f64 / b as f64).partial_cmp(&(c as f64 / d as f64)).unwrap();
            // f64 is exact for these small ratios' comparison only up to ties
            if a * d != c * b {
                prop_assert_eq!(lhs.cmp(&rhs), real);
            } else {
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
