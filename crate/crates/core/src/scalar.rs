//! Scalar traits the matrix and spectral code is generic over.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, Num, NumAssignOps, ToPrimitive};

/// Matrix entry type: integers for exact sign/weighing arithmetic, floats for spectra.
pub trait Element: Copy + Num + NumAssignOps + PartialOrd + Debug + Send + Sync + Sum + 'static {
    fn from_sign(s: i8) -> Self;

    fn abs_val(self) -> Self {
        if self < Self::zero() {
            Self::zero() - self
        } else {
            self
        }
    }
}

macro_rules! impl_element {
    ($($t:ty),*) => {
        $(impl Element for $t {
            #[inline]
            fn from_sign(s: i8) -> Self {
                s as $t
            }
        })*
    };
}

impl_element!(i32, i64, i128, f32, f64);

/// Real floating-point scalar: f32 or f64.
pub trait Real: Element + Float + FromPrimitive + ToPrimitive + Display {
    /// Lift an `f64` constant into this type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("real scalar converts to f64")
    }

    /// Relative floor below which rotations and thresholds stop making sense.
    fn precision_floor() -> Self {
        Self::epsilon() * Self::lit(8.0)
    }
}

impl<T> Real for T where T: Element + Float + FromPrimitive + ToPrimitive + Display {}
