//! Complex scalars and forward-mode dual numbers.
//!
//! Every coefficient function in the crate is written once, generically over
//! [`Scalar`]. Evaluating it at `C64` gives values; evaluating it at
//! `Dual<C64>` gives a directional derivative; `Dual<Dual<C64>>` gives a mixed
//! second derivative, and so on. Nesting is unbounded, so derived fields
//! (Lie brackets of Lie brackets, exterior derivatives of exterior
//! derivatives) differentiate through each other without truncation error.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use num_complex::Complex64 as C64;

/// Shorthand for a complex constant.
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

/// Numeric tower used by every field evaluation.
pub trait Scalar:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<C64, Output = Self>
    + Mul<C64, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn constant(c: C64) -> Self;
    /// Primal (non-derivative) part.
    fn value(&self) -> C64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn exp(self) -> Self;

    #[inline]
    fn real(x: f64) -> Self {
        Self::constant(c64(x, 0.0))
    }
    #[inline]
    fn zero() -> Self {
        Self::real(0.0)
    }
    #[inline]
    fn one() -> Self {
        Self::real(1.0)
    }
}

impl Scalar for C64 {
    #[inline]
    fn constant(c: C64) -> Self {
        c
    }
    #[inline]
    fn value(&self) -> C64 {
        *self
    }
    #[inline]
    fn sin(self) -> Self {
        C64::sin(self)
    }
    #[inline]
    fn cos(self) -> Self {
        C64::cos(self)
    }
    #[inline]
    fn exp(self) -> Self {
        C64::exp(self)
    }
}

/// A dual number `re + eps·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    #[inline]
    pub fn new(re: T, eps: T) -> Self {
        Self { re, eps }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.eps + o.eps)
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.eps - o.eps)
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re, self.re * o.eps + self.eps * o.re)
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    #[inline]
    fn div(self, o: Self) -> Self {
        let q = self.re / o.re;
        Self::new(q, (self.eps - q * o.eps) / o.re)
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.eps)
    }
}

impl<T: Scalar> Add<C64> for Dual<T> {
    type Output = Self;
    #[inline]
    fn add(self, c: C64) -> Self {
        Self::new(self.re + c, self.eps)
    }
}

impl<T: Scalar> Mul<C64> for Dual<T> {
    type Output = Self;
    #[inline]
    fn mul(self, c: C64) -> Self {
        Self::new(self.re * c, self.eps * c)
    }
}

impl<T: Scalar> AddAssign for Dual<T> {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> SubAssign for Dual<T> {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<T: Scalar> MulAssign for Dual<T> {
    #[inline]
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    #[inline]
    fn constant(c: C64) -> Self {
        Self::new(T::constant(c), T::zero())
    }
    #[inline]
    fn value(&self) -> C64 {
        self.re.value()
    }
    #[inline]
    fn sin(self) -> Self {
        Self::new(self.re.sin(), self.eps * self.re.cos())
    }
    #[inline]
    fn cos(self) -> Self {
        Self::new(self.re.cos(), -(self.eps * self.re.sin()))
    }
    #[inline]
    fn exp(self) -> Self {
        let e = self.re.exp();
        Self::new(e, self.eps * e)
    }
}

/// Lift a point into dual numbers with tangent `dir`.
#[inline]
pub fn seed<S: Scalar, const N: usize>(x: &[S; N], dir: &[S; N]) -> [Dual<S>; N] {
    std::array::from_fn(|i| Dual::new(x[i], dir[i]))
}

/// Lift a point into dual numbers along coordinate direction `axis`.
#[inline]
pub fn seed_axis<S: Scalar, const N: usize>(x: &[S; N], axis: usize) -> [Dual<S>; N] {
    std::array::from_fn(|i| Dual::new(x[i], if i == axis { S::one() } else { S::zero() }))
}

/// Embed a complex point as constants of any scalar type.
#[inline]
pub fn lift<S: Scalar, const N: usize>(x: &[C64; N]) -> [S; N] {
    std::array::from_fn(|i| S::constant(x[i]))
}

/// Derivative of a scalar function of one variable at `x`.
pub fn derivative<F>(f: F, x: C64) -> C64
where
    F: Fn(Dual<C64>) -> Dual<C64>,
{
    f(Dual::new(x, C64::new(1.0, 0.0))).eps
}
