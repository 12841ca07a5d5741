//! Real scalar abstraction: the complex linear algebra in this crate is
//! generic over the underlying float type (f32 or f64).

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating-point scalar: f32 or f64.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + std::fmt::Debug
    + std::fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Convert an f64 constant into this scalar type.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type C<R> = Complex<R>;

/// Complex zero.
pub fn czero<R: Real>() -> C<R> {
    Complex::new(R::zero(), R::zero())
}

/// Complex one.
pub fn cone<R: Real>() -> C<R> {
    Complex::new(R::one(), R::zero())
}

/// Imaginary unit.
pub fn ci<R: Real>() -> C<R> {
    Complex::new(R::zero(), R::one())
}

/// Complex number from f64 parts.
pub fn c<R: Real>(re: f64, im: f64) -> C<R> {
    Complex::new(R::real(re), R::real(im))
}

/// Relative discrepancy |a - b| / max(|a|, |b|); zero when both vanish.
pub fn rel_err<R: Real>(a: C<R>, b: C<R>) -> R {
    let denom = a.norm().max(b.norm());
    if denom == R::zero() {
        R::zero()
    } else {
        (a - b).norm() / denom
    }
}
