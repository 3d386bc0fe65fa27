//! Scalar abstraction for the numerical kernels.
//!
//! Everything downstream is written against [`Real`] so the same code runs
//! at `f32` and `f64`. The verification tolerances quoted throughout the
//! crate assume `f64`; at `f32` the machinery works but the thresholds must
//! be relaxed by the caller.

use num_complex::Complex;
use num_traits::{FromPrimitive, Num, NumAssign};

/// Real scalar type backing all complex linear algebra in this crate.
pub trait Real:
    nalgebra::RealField + Num + NumAssign + FromPrimitive + Copy + Default + Send + Sync
{
    /// Shorthand for lossy conversion of an `f64` constant.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }

    /// Lossy conversion of a `usize` count.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over the crate scalar.
pub type C<T> = Complex<T>;

/// `re + 0i`.
pub fn cre<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

/// The imaginary unit.
pub fn ci<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::one())
}

/// `e^{iθ}` for real θ.
pub fn cis<T: Real>(theta: T) -> C<T> {
    Complex::new(theta.cos(), theta.sin())
}

// `num_complex` gates its float methods on `num_traits::Float`, which we keep
// out of `Real` so RealField/Float method names never collide. These
// free-function equivalents cover what the crate needs.

/// Modulus `|z|`.
pub fn cnorm<T: Real>(z: C<T>) -> T {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Squared modulus `|z|^2`.
pub fn cnorm_sqr<T: Real>(z: C<T>) -> T {
    z.re * z.re + z.im * z.im
}

/// Complex conjugate.
pub fn cconj<T: Real>(z: C<T>) -> C<T> {
    Complex::new(z.re, -z.im)
}

/// Principal argument in (-pi, pi].
pub fn carg<T: Real>(z: C<T>) -> T {
    z.im.atan2(z.re)
}

/// `r e^{i theta}`.
pub fn cpolar<T: Real>(r: T, theta: T) -> C<T> {
    Complex::new(r * theta.cos(), r * theta.sin())
}

/// `e^z` for complex z.
pub fn cexp<T: Real>(z: C<T>) -> C<T> {
    let m = z.re.exp();
    Complex::new(m * z.im.cos(), m * z.im.sin())
}

/// Integer power of a complex number by repeated squaring.
pub fn cpowi<T: Real>(z: C<T>, n: usize) -> C<T> {
    let mut base = z;
    let mut k = n;
    let mut acc = cre(T::one());
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}

/// True when both components are finite.
pub fn cfinite<T: Real>(z: C<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Widen to `f64` for diagnostics (NaN when not representable).
pub fn as_f64<T: Real>(x: T) -> f64 {
    nalgebra::convert_unchecked::<T, f64>(x)
}
