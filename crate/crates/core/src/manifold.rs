//! Coordinates on S³×Σ², the left-invariant SU(2) coframe and frame, and Lie
//! brackets of vector fields.
//!
//! Coordinates are ordered `(ψ, θ, φ, r, u)` everywhere; every coefficient
//! array in the crate uses this order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeometryError, Result};
use crate::scalar::{lift, seed, Scalar, C64};

pub const PSI: usize = 0;
pub const THETA: usize = 1;
pub const PHI: usize = 2;
pub const R: usize = 3;
pub const U: usize = 4;

/// Lower edge of the θ sampling band `[0.3, π - 0.3]`.
pub const THETA_MARGIN: f64 = 0.3;
/// |sin θ| below which the Euler chart is treated as degenerate.
pub const CHART_EPS: f64 = 1e-6;

/// A point `(ψ, θ, φ, r, u)` of S³×Σ².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point5 {
    pub psi: C64,
    pub theta: C64,
    pub phi: C64,
    pub r: C64,
    pub u: C64,
}

impl Point5 {
    pub fn new(psi: f64, theta: f64, phi: f64, r: f64, u: f64) -> Self {
        Self::from_coords([psi, theta, phi, r, u].map(|x| C64::new(x, 0.0)))
    }

    pub fn from_coords(x: [C64; 5]) -> Self {
        Self {
            psi: x[0],
            theta: x[1],
            phi: x[2],
            r: x[3],
            u: x[4],
        }
    }

    pub fn coords(&self) -> [C64; 5] {
        [self.psi, self.theta, self.phi, self.r, self.u]
    }

    pub fn with_r(mut self, r: f64) -> Self {
        self.r = C64::new(r, 0.0);
        self
    }

    pub fn sin_theta(&self) -> f64 {
        self.theta.sin().norm()
    }

    pub fn check_chart(&self) -> Result<()> {
        let s = self.sin_theta();
        if s < CHART_EPS {
            Err(GeometryError::ChartDegenerate { sin_theta: s })
        } else {
            Ok(())
        }
    }
}

/// Deterministic sampler of points in the working band
/// `ψ, φ ∈ [0, 2π)`, `θ ∈ [0.3, π-0.3]`, `r ∈ [-0.5, 0.5]`, `u ∈ [-1, 1]`.
///
/// The r-range keeps clear of the zeros of `cos 3r` where the real
/// profiles of the second maximally symmetric case degenerate.
pub struct Sampler {
    rng: ChaCha8Rng,
    pub r_range: (f64, f64),
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            r_range: (-0.5, 0.5),
        }
    }

    pub fn point(&mut self) -> Point5 {
        let tau = std::f64::consts::TAU;
        let psi = self.rng.random_range(0.0..tau);
        let theta = self
            .rng
            .random_range(THETA_MARGIN..=std::f64::consts::PI - THETA_MARGIN);
        let phi = self.rng.random_range(0.0..tau);
        let r = self.rng.random_range(self.r_range.0..=self.r_range.1);
        let u = self.rng.random_range(-1.0..=1.0);
        Point5::new(psi, theta, phi, r, u)
    }

    pub fn points(&mut self, n: usize) -> Vec<Point5> {
        (0..n).map(|_| self.point()).collect()
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..=hi)
    }
}

/// A vector field, coefficients in the basis `(∂ψ, ∂θ, ∂φ, ∂r, ∂u)`.
pub trait VectorField {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5];

    fn at(&self, p: &Point5) -> [C64; 5] {
        self.coeffs(&p.coords())
    }
}

/// Five one-forms (rows), coefficients in the basis `(dψ, dθ, dφ, dr, du)`.
pub trait CoframeField {
    fn rows<S: Scalar>(&self, x: &[S; 5]) -> [[S; 5]; 5];

    fn at(&self, p: &Point5) -> [[C64; 5]; 5] {
        self.rows(&p.coords())
    }
}

/// `σ₁, σ₂, σ₃` in Euler angles.
pub fn su2_rows<S: Scalar>(x: &[S; 5]) -> [[S; 5]; 3] {
    let (psi, theta) = (x[PSI], x[THETA]);
    let (sp, cp) = (psi.sin(), psi.cos());
    let (st, ct) = (theta.sin(), theta.cos());
    let z = S::zero();
    [
        [z, sp, -(cp * st), z, z],
        [z, cp, sp * st, z, z],
        [-S::one(), z, -ct, z, z],
    ]
}

/// The left-invariant coframe `σ₁, σ₂, σ₃` at `p`.
pub fn su2_coframe(p: &Point5) -> [[C64; 5]; 3] {
    su2_rows(&p.coords())
}

/// The left-invariant vector field `E^a` (a = 1, 2, 3), dual to `σ_a`.
#[derive(Clone, Copy, Debug)]
pub struct LeftInvariant(pub usize);

impl VectorField for LeftInvariant {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        let (psi, theta) = (x[PSI], x[THETA]);
        let (sp, cp) = (psi.sin(), psi.cos());
        let (st, ct) = (theta.sin(), theta.cos());
        let z = S::zero();
        match self.0 {
            1 => [ct * cp / st, sp, -(cp / st), z, z],
            2 => [-(ct * sp / st), cp, sp / st, z, z],
            3 => [-S::one(), z, z, z, z],
            a => panic!("left-invariant field index must be 1, 2 or 3, got {a}"),
        }
    }
}

/// The coordinate field `∂/∂x^axis`.
#[derive(Clone, Copy, Debug)]
pub struct Coordinate(pub usize);

impl VectorField for Coordinate {
    fn coeffs<S: Scalar>(&self, _x: &[S; 5]) -> [S; 5] {
        std::array::from_fn(|i| if i == self.0 { S::one() } else { S::zero() })
    }
}

/// `E¹, E², E³` at `p`.
pub fn su2_frame(p: &Point5) -> Result<[[C64; 5]; 3]> {
    p.check_chart()?;
    Ok([1, 2, 3].map(|a| LeftInvariant(a).at(p)))
}

/// Pairing of a one-form row with a vector.
pub fn pair<S: Scalar>(form: &[S; 5], v: &[S; 5]) -> S {
    form.iter().zip(v).fold(S::zero(), |acc, (&a, &b)| acc + a * b)
}

/// `[X, Y]` as a field: `(X·∇)Y − (Y·∇)X`, with the directional
/// derivatives taken by dual numbers seeded along the other field.
pub struct Bracket<'a, X: ?Sized, Y: ?Sized> {
    pub x: &'a X,
    pub y: &'a Y,
}

impl<'a, X: VectorField + ?Sized, Y: VectorField + ?Sized> Bracket<'a, X, Y> {
    pub fn new(x: &'a X, y: &'a Y) -> Self {
        Self { x, y }
    }
}

impl<X: VectorField + ?Sized, Y: VectorField + ?Sized> VectorField for Bracket<'_, X, Y> {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        let xv = self.x.coeffs(x);
        let yv = self.y.coeffs(x);
        let x_dy = self.y.coeffs(&seed(x, &xv));
        let y_dx = self.x.coeffs(&seed(x, &yv));
        std::array::from_fn(|i| x_dy[i].eps - y_dx[i].eps)
    }
}

/// `[X, Y](p)`.
pub fn lie_bracket<X, Y>(x: &X, y: &Y, p: &Point5) -> Result<[C64; 5]>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    p.check_chart()?;
    Ok(Bracket::new(x, y).coeffs(&lift::<C64, 5>(&p.coords())))
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
