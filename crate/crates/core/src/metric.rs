//! Metric fields: symmetric matrix-valued functions of the coordinates that
//! can be evaluated at any [`Scalar`], so the curvature pipeline gets first
//! and second derivatives by nesting dual numbers.

use crate::manifold::{su2_rows, Point5, R, U};
use crate::profile::Profile;
use crate::scalar::{Scalar, C64};

/// A (possibly complex) metric in `N` coordinates.
pub trait MetricField<const N: usize> {
    fn matrix<S: Scalar>(&self, x: &[S; N]) -> [[S; N]; N];

    fn at(&self, x: &[C64; N]) -> [[C64; N]; N] {
        self.matrix(x)
    }
}

impl<const N: usize, M: MetricField<N> + ?Sized> MetricField<N> for &M {
    fn matrix<S: Scalar>(&self, x: &[S; N]) -> [[S; N]; N] {
        (**self).matrix(x)
    }
}

/// A finite family of one-forms on the five-manifold.
pub trait FormSet {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]>;
}

/// `Σ c · (α_i α_j)` with the symmetric product `αβ = ½(α⊗β + β⊗α)`.
#[derive(Clone, Debug)]
pub struct QuadraticMetric<F> {
    pub forms: F,
    pub terms: Vec<(usize, usize, C64)>,
}

impl<F: FormSet> QuadraticMetric<F> {
    pub fn new(forms: F, terms: Vec<(usize, usize, C64)>) -> Self {
        Self { forms, terms }
    }
}

/// `Σ c · (α_i α_j)` assembled from explicit rows.
pub fn quadratic_from_rows<S: Scalar>(rows: &[[S; 5]], terms: &[(usize, usize, C64)]) -> [[S; 5]; 5] {
    let mut g = [[S::zero(); 5]; 5];
    let half = C64::new(0.5, 0.0);
    for &(i, j, c) in terms {
        let (fi, fj) = (&rows[i], &rows[j]);
        let w = c * half;
        for a in 0..5 {
            for b in 0..5 {
                g[a][b] += (fi[a] * fj[b] + fi[b] * fj[a]) * w;
            }
        }
    }
    g
}

impl<F: FormSet> MetricField<5> for QuadraticMetric<F> {
    fn matrix<S: Scalar>(&self, x: &[S; 5]) -> [[S; 5]; 5] {
        quadratic_from_rows(&self.forms.forms(x), &self.terms)
    }
}

/// `Ω(x^axis)² g` for a profile `Ω`.
#[derive(Clone, Debug)]
pub struct Conformal<M> {
    pub metric: M,
    pub factor: Profile,
    pub axis: usize,
}

impl<M> Conformal<M> {
    /// Rescale by `Ω(r)²`.
    pub fn radial(metric: M, factor: Profile) -> Self {
        Self {
            metric,
            factor,
            axis: R,
        }
    }

    /// Rescale by the constant `c²`.
    pub fn constant(metric: M, c: C64) -> Self {
        Self {
            metric,
            factor: Profile::constant(c),
            axis: 0,
        }
    }
}

impl<const N: usize, M: MetricField<N>> MetricField<N> for Conformal<M> {
    fn matrix<S: Scalar>(&self, x: &[S; N]) -> [[S; N]; N] {
        let w = self.factor.eval(x[self.axis]);
        let w2 = w * w;
        self.metric.matrix(x).map(|row| row.map(|v| v * w2))
    }
}

/// Surface of revolution `dr² + h(r)² du²` in coordinates `(r, u)`.
#[derive(Clone, Copy, Debug)]
pub struct SurfaceMetric {
    pub h: Profile,
}

impl MetricField<2> for SurfaceMetric {
    fn matrix<S: Scalar>(&self, x: &[S; 2]) -> [[S; 2]; 2] {
        let h = self.h.eval(x[0]);
        [[S::one(), S::zero()], [S::zero(), h * h]]
    }
}

/// The `(r, u)` block of a five-dimensional metric at a fixed point of S³.
#[derive(Clone, Debug)]
pub struct SurfaceBlock<M> {
    pub metric: M,
    pub base: [C64; 3],
}

impl<M: MetricField<5>> MetricField<2> for SurfaceBlock<M> {
    fn matrix<S: Scalar>(&self, x: &[S; 2]) -> [[S; 2]; 2] {
        let full = [
            S::constant(self.base[0]),
            S::constant(self.base[1]),
            S::constant(self.base[2]),
            x[0],
            x[1],
        ];
        let g = self.metric.matrix(&full);
        [[g[R][R], g[R][U]], [g[U][R], g[U][U]]]
    }
}

/// Forms `σ₁, σ₂, σ₃, dr, f(r) du` of the split product metric.
#[derive(Clone, Copy, Debug)]
pub struct ProductForms {
    pub f: Profile,
}

impl FormSet for ProductForms {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]> {
        let s = su2_rows(x);
        let z = S::zero();
        let mut du = [z; 5];
        du[U] = self.f.eval(x[R]);
        let mut dr = [z; 5];
        dr[R] = S::one();
        vec![s[0], s[1], s[2], dr, du]
    }
}

/// `σ₁σ₁ + σ₂σ₂ + σ₃σ₃ − dr² − f(r)² du²`.
pub fn split_product_metric(f: Profile) -> QuadraticMetric<ProductForms> {
    let one = C64::new(1.0, 0.0);
    QuadraticMetric::new(
        ProductForms { f },
        vec![(0, 0, one), (1, 1, one), (2, 2, one), (3, 3, -one), (4, 4, -one)],
    )
}

/// Evaluate a five-dimensional metric at a point.
pub fn metric_at<M: MetricField<5> + ?Sized>(m: &M, p: &Point5) -> [[C64; 5]; 5] {
    m.matrix(&p.coords())
}

/// `g(X, Y)` for coordinate-basis vectors.
pub fn metric_pair<const N: usize>(g: &[[C64; N]; N], x: &[C64; N], y: &[C64; N]) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for a in 0..N {
        for b in 0..N {
            s += g[a][b] * x[a] * y[b];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{Coordinate, LeftInvariant, VectorField};
    use crate::scalar::c64;

    #[test]
    fn split_metric_on_frame_vectors() {
        let g = split_product_metric(Profile::exp(c64(1.0, 0.0), c64(-1.0, 0.0)));
        let p = Point5::new(0.4, 1.0, 2.0, 0.3, -0.5);
        let m = metric_at(&g, &p);
        let e1 = LeftInvariant(1).at(&p);
        let e2 = LeftInvariant(2).at(&p);
        assert!((metric_pair(&m, &e1, &e1) - c64(1.0, 0.0)).norm() < 1e-14);
        assert!(metric_pair(&m, &e1, &e2).norm() < 1e-14);
        let dr = Coordinate(R).at(&p);
        assert!((metric_pair(&m, &dr, &dr) + c64(1.0, 0.0)).norm() < 1e-15);
        let du = Coordinate(U).at(&p);
        let f = (-0.3f64).exp();
        assert!((metric_pair(&m, &du, &du) + c64(f * f, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn conformal_rescale_multiplies_entries() {
        let s = SurfaceMetric {
            h: Profile::Cos {
                amp: c64(0.5, 0.0),
                freq: c64(3.0, 0.0),
            },
        };
        let c = Conformal {
            metric: s,
            factor: Profile::constant(c64(0.0, 2.0)),
            axis: 0,
        };
        let x = [c64(0.1, 0.0), c64(0.2, 0.0)];
        let (a, b) = (s.at(&x), c.at(&x));
        assert!((b[1][1] - a[1][1] * c64(-4.0, 0.0)).norm() < 1e-15);
    }
}
