//! Exact rational scalars.
//!
//! Every coefficient in the system is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with positive denominator. There is no
//! floating-point fallback.

use num_bigint::BigInt;

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// Rational from a numerator/denominator pair. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The scalar 1/2.
pub fn half() -> Rat {
    rat(1, 2)
}
