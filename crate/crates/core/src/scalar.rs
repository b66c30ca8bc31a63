//! Scalar types usable as plane coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::fmt::Debug;

/// Coordinate type for the geometric layer.
///
/// Any signed field-like number type works. Exact types (`BigRational`,
/// `Ratio<i64>` for small inputs) give exact predicates; `f32`/`f64` are
/// accepted for quick experiments but make no robustness promises.
pub trait Scalar: Clone + PartialOrd + Debug + Signed + ToPrimitive + 'static {}

impl<T> Scalar for T where T: Clone + PartialOrd + Debug + Signed + ToPrimitive + 'static {}

/// Arbitrary-precision rational number, the default coordinate type.
pub type Rational = BigRational;

/// Builds a rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sign of a scalar as -1, 0 or +1.
pub fn sign<T: Scalar>(x: &T) -> i8 {
    let zero = T::zero();
    if *x > zero {
        1
    } else if *x < zero {
        -1
    } else {
        0
    }
}
