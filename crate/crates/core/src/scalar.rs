//! Scalar abstraction shared by every algebra in the crate.
//!
//! The algebraic modules are written once against [`Scalar`] and instantiated
//! with exact rationals ([`crate::Rational`]) for verification work or with
//! `f64` where floating point is wanted (the Lorentz exponentials).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A field element usable as a coefficient of quaternions, octonions and
/// real matrices.
///
/// Zero tests (`is_zero`) are exact for rationals; for floats they are the
/// usual bitwise comparison, so rank and kernel computations are only
/// meaningful over an exact field.
pub trait Scalar:
    Num + Signed + Clone + PartialEq + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer must be representable")
    }

    fn half() -> Self {
        Self::one() / Self::from_int(2)
    }

    /// Lossy conversion used when leaving exact arithmetic.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for BigRational {}

/// Builds `num / den` as an exact rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for `T::from_int`.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_is_exact_for_rationals() {
        assert_eq!(BigRational::half() + BigRational::half(), BigRational::from_int(1));
        assert_eq!(ratio(2, 4), BigRational::half());
    }

    #[test]
    fn rationals_parse_from_fraction_text() {
        let q: BigRational = "-3/4".parse().unwrap();
        assert_eq!(q, ratio(-3, 4));
        assert!((q.to_f64_lossy() + 0.75).abs() < 1e-15);
    }
}
