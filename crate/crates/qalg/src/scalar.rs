//! Exact rational scalars.
//!
//! Every coefficient in the library is a `Scalar`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. No floating
//! point is used anywhere.

use num::BigRational;

/// Exact rational scalar type used for all coefficients.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

/// Rational scalar `n / d`; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let s = ratio(4, -6);
        assert_eq!(s, ratio(-2, 3));
        assert_eq!(s.to_string(), "-2/3");
    }

    #[test]
    fn integers_display_without_denominator() {
        assert_eq!(int(7).to_string(), "7");
        assert_eq!(int(-3).to_string(), "-3");
        assert_eq!(ratio(6, 3).to_string(), "2");
    }

    #[test]
    fn zero_detection() {
        assert!((int(2) - int(2)).is_zero());
        assert!(!ratio(1, 2).is_zero());
    }
}
