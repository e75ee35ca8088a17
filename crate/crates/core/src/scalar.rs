use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

/// Exact rational number used by the oracle and the exact closed-form path.
pub type Rational = BigRational;

/// Arithmetic shared by the exact and floating evaluation paths.
///
/// Every closed form is written once against this trait and instantiated for
/// `f64` (used by the optimizer) and [`Rational`] (used by tests and the
/// oracle, where the identities hold exactly).
pub trait Scalar: Clone + Debug + PartialOrd + Num + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;

    fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    fn to_f64(&self) -> f64;

    /// Nearest value to a finite float; exact for rationals.
    fn from_f64(x: f64) -> Self;

    /// Whether a sum of weights is acceptably close to one.
    fn is_unit_total(&self) -> bool;

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(x: f64) -> Self {
        x
    }

    fn is_unit_total(&self) -> bool {
        (self - 1.0).abs() <= 1e-12
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Self {
        rational_from_f64(x)
    }

    fn is_unit_total(&self) -> bool {
        self.is_one()
    }
}

/// Exact rational value of a finite `f64`.
pub(crate) fn rational_from_f64(x: f64) -> Rational {
    BigRational::from_float(x).unwrap_or_else(Rational::zero)
}
