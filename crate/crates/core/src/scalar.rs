//! Scalar abstractions.
//!
//! Coefficient algebra (Pochhammer products, operator factors, truncated
//! series) only needs field operations and works over [`Scalar`], which is
//! implemented for `f32`, `f64` and [`BigRational`]. Anything that needs
//! logarithms, powers or absolute values is written against [`Real`].

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

/// A field element usable as a series coefficient.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// Lossless where possible; rationals are rounded to nearest.
    fn as_f64(&self) -> f64;

    /// Conversion from an f64 literal. Exact for binary floats and rationals.
    fn from_lit(v: f64) -> Self;

    /// True for 0, -1, -2, ... (the poles of the gamma function).
    fn is_nonpositive_integer(&self) -> bool;

    fn from_index(v: usize) -> Self {
        Self::from_int(v as i64)
    }
}

/// Real floating-point scalar.
pub trait Real: Scalar + Float + FromPrimitive + Copy {
    fn lit(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite literal")
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn as_f64(&self) -> f64 {
        *self
    }
    fn from_lit(v: f64) -> Self {
        v
    }
    fn is_nonpositive_integer(&self) -> bool {
        *self <= 0.0 && self.fract() == 0.0
    }
}

impl Real for f64 {}

impl Scalar for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }
    fn as_f64(&self) -> f64 {
        *self as f64
    }
    fn from_lit(v: f64) -> Self {
        v as f32
    }
    fn is_nonpositive_integer(&self) -> bool {
        *self <= 0.0 && self.fract() == 0.0
    }
}

impl Real for f32 {}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn from_lit(v: f64) -> Self {
        BigRational::from_float(v).expect("finite f64")
    }
    fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && !self.is_positive()
    }
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)` by explicit product.
pub fn rising<T: Scalar>(a: &T, m: usize) -> T {
    let mut acc = T::one();
    let mut factor = a.clone();
    for _ in 0..m {
        acc = acc * factor.clone();
        factor = factor + T::one();
    }
    acc
}

/// `m!` in the scalar type.
pub fn factorial<T: Scalar>(m: usize) -> T {
    rising(&T::one(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_matches_factorial() {
        assert_eq!(rising(&1.0f64, 5), 120.0);
        assert_eq!(factorial::<BigRational>(6), BigRational::from_int(720));
    }

    #[test]
    fn detects_gamma_poles() {
        assert!(0.0f64.is_nonpositive_integer());
        assert!((-3.0f64).is_nonpositive_integer());
        assert!(!(-2.5f64).is_nonpositive_integer());
        assert!(!1.0f64.is_nonpositive_integer());
        assert!(BigRational::from_int(-4).is_nonpositive_integer());
        assert!(!BigRational::from_lit(-0.5).is_nonpositive_integer());
    }

    #[test]
    fn rational_from_f64_is_exact() {
        let q = BigRational::from_lit(0.1);
        assert_eq!(q.as_f64(), 0.1);
        assert_ne!(q, BigRational::new(1.into(), 10.into()));
    }
}
