use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Float, Num, ToPrimitive};

use crate::exactnum::Rational;

/// Real scalar used by the floating-point oracles.
pub trait Real: Num + Copy + PartialOrd + Neg<Output = Self> + Debug + Send + Sync + 'static {
    /// Significand bits carried by the type.
    const MANTISSA_BITS: u32;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn from_rational(r: &Rational) -> Self;
    fn sqrt(self) -> Self;
    fn epsilon() -> Self;

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn max(self, other: Self) -> Self {
        if self < other {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

macro_rules! impl_real_float {
    ($t:ty, $bits:expr) => {
        impl Real for $t {
            const MANTISSA_BITS: u32 = $bits;

            fn from_f64(v: f64) -> Self {
                v as $t
            }
            fn to_f64(self) -> f64 {
                self as f64
            }
            fn from_rational(r: &Rational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn sqrt(self) -> Self {
                Float::sqrt(self)
            }
            fn epsilon() -> Self {
                <$t as Float>::epsilon()
            }
        }
    };
}

impl_real_float!(f32, 24);
impl_real_float!(f64, 53);
