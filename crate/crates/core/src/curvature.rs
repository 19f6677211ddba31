//! Metric → Levi-Civita → Riemann → Ricci → scalar → Schouten → Weyl, over
//! the complex numbers.
//!
//! Conventions:
//!
//! ```text
//! Γ^ρ_{μν}   = ½ g^{ρλ} (∂_μ g_{λν} + ∂_ν g_{λμ} − ∂_λ g_{μν})
//! R^ρ_{σμν}  = ∂_μ Γ^ρ_{νσ} − ∂_ν Γ^ρ_{μσ} + Γ^ρ_{μλ} Γ^λ_{νσ} − Γ^ρ_{νλ} Γ^λ_{μσ}
//! R_{ρσμν}   = g_{ρα} R^α_{σμν}
//! Ric_{σν}   = R^μ_{σμν}
//! P          = (Ric − s g / (2(n−1))) / (n−2)
//! C          = Riem − P ⊙ g     (Kulkarni–Nomizu)
//! ```
//!
//! With these the round unit 2-sphere has `K = s/2 = +1`.

use crate::error::{GeometryError, Result};
use crate::linalg::{invert, Mat};
use crate::manifold::{CoframeField, Point5, Sampler};
use crate::metric::MetricField;
use crate::scalar::{Dual, C64};

pub type Tensor3<const N: usize> = [[[C64; N]; N]; N];
pub type Tensor4<const N: usize> = [[[[C64; N]; N]; N]; N];

/// |det g| below which a metric is rejected.
pub const METRIC_DET_EPS: f64 = 1e-12;

const Z: C64 = C64::new(0.0, 0.0);

fn zero3<const N: usize>() -> Tensor3<N> {
    [[[Z; N]; N]; N]
}

fn zero4<const N: usize>() -> Tensor4<N> {
    [[[[Z; N]; N]; N]; N]
}

/// Metric value with first and second coordinate derivatives at a point.
pub struct MetricJet<const N: usize> {
    pub g: Mat<N>,
    /// `dg[c][a][b] = ∂_c g_{ab}`
    pub dg: Tensor3<N>,
    /// `ddg[c][d][a][b] = ∂_c ∂_d g_{ab}`
    pub ddg: Tensor4<N>,
}

/// Second-order jet of a metric by nested dual numbers, one evaluation per
/// unordered pair of directions.
pub fn metric_jet<const N: usize, M: MetricField<N> + ?Sized>(gf: &M, x: &[C64; N]) -> MetricJet<N> {
    let mut g = [[Z; N]; N];
    let mut dg = zero3::<N>();
    let mut ddg = zero4::<N>();
    let one = C64::new(1.0, 0.0);
    for c in 0..N {
        for d in c..N {
            let pt: [Dual<Dual<C64>>; N] = std::array::from_fn(|i| {
                let inner = Dual::new(x[i], if i == d { one } else { Z });
                let outer = Dual::new(if i == c { one } else { Z }, Z);
                Dual::new(inner, outer)
            });
            let m = gf.matrix(&pt);
            for a in 0..N {
                for b in 0..N {
                    let v = m[a][b];
                    if c == 0 && d == 0 {
                        g[a][b] = v.re.re;
                    }
                    if c == d {
                        dg[c][a][b] = v.eps.re;
                    }
                    ddg[c][d][a][b] = v.eps.eps;
                    ddg[d][c][a][b] = v.eps.eps;
                }
            }
        }
    }
    MetricJet { g, dg, ddg }
}

/// All curvature tensors at one point.
///
/// For `N = 2` the Schouten tensor is undefined and the Weyl tensor vanishes
/// identically; both are returned as zero.
#[derive(Clone, Debug)]
pub struct CurvatureTensors<const N: usize> {
    pub metric: Mat<N>,
    pub inverse: Mat<N>,
    /// `gamma[ρ][μ][ν] = Γ^ρ_{μν}`
    pub gamma: Tensor3<N>,
    /// `(0,4)` Riemann `R_{ρσμν}`
    pub riem: Tensor4<N>,
    pub ric: Mat<N>,
    pub scalar: C64,
    pub schouten: Mat<N>,
    /// `(0,4)` Weyl `C_{ρσμν}`
    pub weyl: Tensor4<N>,
}

/// `(h ⊙ k)_{abcd} = h_ac k_bd + h_bd k_ac − h_ad k_bc − h_bc k_ad`.
pub fn kulkarni_nomizu<const N: usize>(h: &Mat<N>, k: &Mat<N>) -> Tensor4<N> {
    let mut t = zero4::<N>();
    for a in 0..N {
        for b in 0..N {
            for c in 0..N {
                for d in 0..N {
                    t[a][b][c][d] = h[a][c] * k[b][d] + h[b][d] * k[a][c] - h[a][d] * k[b][c] - h[b][c] * k[a][d];
                }
            }
        }
    }
    t
}

/// Curvature of `gf` at `x`.
pub fn curvature_at<const N: usize, M: MetricField<N> + ?Sized>(gf: &M, x: &[C64; N]) -> Result<CurvatureTensors<N>> {
    let MetricJet { g, dg, ddg } = metric_jet(gf, x);
    curvature_from_jet(&g, &dg, &ddg)
}

/// Curvature of a five-dimensional metric at `p`.
pub fn curvature_at_point<M: MetricField<5> + ?Sized>(gf: &M, p: &Point5) -> Result<CurvatureTensors<5>> {
    curvature_at(gf, &p.coords())
}

pub fn curvature_from_jet<const N: usize>(
    g: &Mat<N>,
    dg: &Tensor3<N>,
    ddg: &Tensor4<N>,
) -> Result<CurvatureTensors<N>> {
    let (ginv, det) = invert(g).ok_or(GeometryError::SingularMetric { det: 0.0 })?;
    if det.norm() < METRIC_DET_EPS {
        return Err(GeometryError::SingularMetric { det: det.norm() });
    }
    let half = C64::new(0.5, 0.0);

    // lower Christoffels Γ_{λμν} and their derivatives ∂_σ Γ_{λμν}
    let mut low = zero3::<N>();
    let mut dlow = zero4::<N>();
    for l in 0..N {
        for m in 0..N {
            for n in 0..N {
                low[l][m][n] = half * (dg[m][l][n] + dg[n][l][m] - dg[l][m][n]);
                for s in 0..N {
                    dlow[s][l][m][n] = half * (ddg[s][m][l][n] + ddg[s][n][l][m] - ddg[s][l][m][n]);
                }
            }
        }
    }

    // ∂_σ g^{-1} = −g^{-1} (∂_σ g) g^{-1}
    let mut dginv = zero3::<N>();
    for s in 0..N {
        for a in 0..N {
            for b in 0..N {
                let mut acc = Z;
                for c in 0..N {
                    for d in 0..N {
                        acc += ginv[a][c] * dg[s][c][d] * ginv[d][b];
                    }
                }
                dginv[s][a][b] = -acc;
            }
        }
    }

    let mut gamma = zero3::<N>();
    // dgamma[σ][ρ][μ][ν] = ∂_σ Γ^ρ_{μν}
    let mut dgamma = zero4::<N>();
    for r in 0..N {
        for m in 0..N {
            for n in 0..N {
                let mut acc = Z;
                for l in 0..N {
                    acc += ginv[r][l] * low[l][m][n];
                }
                gamma[r][m][n] = acc;
                for s in 0..N {
                    let mut acc = Z;
                    for l in 0..N {
                        acc += dginv[s][r][l] * low[l][m][n] + ginv[r][l] * dlow[s][l][m][n];
                    }
                    dgamma[s][r][m][n] = acc;
                }
            }
        }
    }

    // R^ρ_{σμν}
    let mut rup = zero4::<N>();
    for r in 0..N {
        for s in 0..N {
            for m in 0..N {
                for n in 0..N {
                    let mut v = dgamma[m][r][n][s] - dgamma[n][r][m][s];
                    for l in 0..N {
                        v += gamma[r][m][l] * gamma[l][n][s] - gamma[r][n][l] * gamma[l][m][s];
                    }
                    rup[r][s][m][n] = v;
                }
            }
        }
    }

    let mut riem = zero4::<N>();
    for r in 0..N {
        for s in 0..N {
            for m in 0..N {
                for n in 0..N {
                    let mut v = Z;
                    for a in 0..N {
                        v += g[r][a] * rup[a][s][m][n];
                    }
                    riem[r][s][m][n] = v;
                }
            }
        }
    }

    let mut ric = [[Z; N]; N];
    for s in 0..N {
        for n in 0..N {
            let mut v = Z;
            for m in 0..N {
                v += rup[m][s][m][n];
            }
            ric[s][n] = v;
        }
    }
    let mut scalar = Z;
    for a in 0..N {
        for b in 0..N {
            scalar += ginv[a][b] * ric[a][b];
        }
    }

    let (schouten, weyl) = if N > 2 {
        let nf = N as f64;
        let mut p = [[Z; N]; N];
        for a in 0..N {
            for b in 0..N {
                p[a][b] = (ric[a][b] - scalar * g[a][b] / (2.0 * (nf - 1.0))) / (nf - 2.0);
            }
        }
        let pg = kulkarni_nomizu(&p, g);
        let mut w = riem;
        for a in 0..N {
            for b in 0..N {
                for c in 0..N {
                    for d in 0..N {
                        w[a][b][c][d] -= pg[a][b][c][d];
                    }
                }
            }
        }
        (p, w)
    } else {
        ([[Z; N]; N], zero4::<N>())
    };

    Ok(CurvatureTensors {
        metric: *g,
        inverse: ginv,
        gamma,
        riem,
        ric,
        scalar,
        schouten,
        weyl,
    })
}

fn max4<const N: usize>(f: impl Fn(usize, usize, usize, usize) -> C64) -> f64 {
    let mut m = 0.0f64;
    for a in 0..N {
        for b in 0..N {
            for c in 0..N {
                for d in 0..N {
                    m = m.max(f(a, b, c, d).norm());
                }
            }
        }
    }
    m
}

impl<const N: usize> CurvatureTensors<N> {
    pub fn max_weyl(&self) -> f64 {
        max4::<N>(|a, b, c, d| self.weyl[a][b][c][d])
    }

    pub fn max_riemann(&self) -> f64 {
        max4::<N>(|a, b, c, d| self.riem[a][b][c][d])
    }

    pub fn max_ricci(&self) -> f64 {
        self.ric.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `Γ^ρ_{μν} − Γ^ρ_{νμ}`.
    pub fn christoffel_symmetry_residual(&self) -> f64 {
        let mut m = 0.0f64;
        for r in 0..N {
            for a in 0..N {
                for b in 0..N {
                    m = m.max((self.gamma[r][a][b] - self.gamma[r][b][a]).norm());
                }
            }
        }
        m
    }

    /// Largest violation of `R_{abcd} = −R_{bacd} = −R_{abdc} = R_{cdab}`.
    pub fn riemann_symmetry_residual(&self) -> f64 {
        let r = &self.riem;
        max4::<N>(|a, b, c, d| r[a][b][c][d] + r[b][a][c][d])
            .max(max4::<N>(|a, b, c, d| r[a][b][c][d] + r[a][b][d][c]))
            .max(max4::<N>(|a, b, c, d| r[a][b][c][d] - r[c][d][a][b]))
    }

    /// `R_{abcd} + R_{acdb} + R_{adbc}`.
    pub fn bianchi_residual(&self) -> f64 {
        let r = &self.riem;
        max4::<N>(|a, b, c, d| r[a][b][c][d] + r[a][c][d][b] + r[a][d][b][c])
    }

    /// Largest single trace `g^{ac} C_{abcd}` (all index pairs are related
    /// by the Weyl symmetries, so one contraction suffices alongside the
    /// symmetry check).
    pub fn weyl_trace_residual(&self) -> f64 {
        let mut m = 0.0f64;
        for b in 0..N {
            for d in 0..N {
                let mut t1 = Z;
                let mut t2 = Z;
                for a in 0..N {
                    for c in 0..N {
                        t1 += self.inverse[a][c] * self.weyl[a][b][c][d];
                        t2 += self.inverse[a][c] * self.weyl[b][a][d][c];
                    }
                }
                m = m.max(t1.norm()).max(t2.norm());
            }
        }
        let mut t0 = 0.0f64;
        for c in 0..N {
            for d in 0..N {
                let mut t = Z;
                for a in 0..N {
                    for b in 0..N {
                        t += self.inverse[a][b] * self.weyl[a][b][c][d];
                    }
                }
                t0 = t0.max(t.norm());
            }
        }
        m.max(t0)
    }

    /// `(1,3)` Weyl `C^ρ_{σμν}`.
    pub fn weyl_mixed(&self) -> Tensor4<N> {
        let mut t = zero4::<N>();
        for r in 0..N {
            for s in 0..N {
                for m in 0..N {
                    for n in 0..N {
                        let mut v = Z;
                        for a in 0..N {
                            v += self.inverse[r][a] * self.weyl[a][s][m][n];
                        }
                        t[r][s][m][n] = v;
                    }
                }
            }
        }
        t
    }

    /// Gauss curvature `s/2` (meaningful for `N = 2`).
    pub fn gauss(&self) -> C64 {
        self.scalar * 0.5
    }
}

/// Largest entry of `a − b`.
pub fn tensor4_diff<const N: usize>(a: &Tensor4<N>, b: &Tensor4<N>) -> f64 {
    max4::<N>(|i, j, k, l| a[i][j][k][l] - b[i][j][k][l])
}

/// `C(V_i, V_j, V_k, V_l)` where `V` is the frame dual to the given coframe.
pub fn weyl_frame_component<M, F>(gf: &M, frame: &F, idx: (usize, usize, usize, usize), p: &Point5) -> Result<C64>
where
    M: MetricField<5> + ?Sized,
    F: CoframeField + ?Sized,
{
    let rows = frame.at(p);
    let (dual, det) = invert(&rows).ok_or(GeometryError::SingularCoframe { det: 0.0 })?;
    if det.norm() < 1e-12 {
        return Err(GeometryError::SingularCoframe { det: det.norm() });
    }
    let t = curvature_at_point(gf, p)?;
    Ok(frame_component(&t.weyl, &dual, idx))
}

/// Contract a (0,4) tensor with columns of `dual`.
pub fn frame_component(w: &Tensor4<5>, dual: &Mat<5>, (i, j, k, l): (usize, usize, usize, usize)) -> C64 {
    let mut acc = Z;
    for a in 0..5 {
        for b in 0..5 {
            let ab = dual[a][i] * dual[b][j];
            if ab == Z {
                continue;
            }
            for c in 0..5 {
                for d in 0..5 {
                    acc += w[a][b][c][d] * ab * dual[c][k] * dual[d][l];
                }
            }
        }
    }
    acc
}

/// Verdict of a Weyl-flatness sweep.
#[derive(Clone, Copy, Debug)]
pub struct FlatnessReport {
    pub flat: bool,
    pub max_weyl: f64,
}

/// Sample `npoints` points and report the largest Weyl component.
pub fn weyl_flat<M: MetricField<5> + ?Sized>(gf: &M, npoints: usize, tol: f64, seed: u64) -> Result<FlatnessReport> {
    let mut max_weyl = 0.0f64;
    for p in Sampler::new(seed).points(npoints) {
        max_weyl = max_weyl.max(curvature_at_point(gf, &p)?.max_weyl());
    }
    Ok(FlatnessReport {
        flat: max_weyl < tol,
        max_weyl,
    })
}

/// Largest Ricci component of `Ω(r)² g` over `npoints` samples.
pub fn ricci_flat_check<M>(gf: &M, conformal_factor: crate::profile::Profile, npoints: usize, seed: u64) -> Result<f64>
where
    M: MetricField<5> + Clone,
{
    let rescaled = crate::metric::Conformal::radial(gf.clone(), conformal_factor);
    let mut m = 0.0f64;
    for p in Sampler::new(seed).points(npoints) {
        m = m.max(curvature_at_point(&rescaled, &p)?.max_ricci());
    }
    Ok(m)
}

/// Gauss curvature of a surface metric in `(r, u)`.
pub fn gauss_curvature<M: MetricField<2> + ?Sized>(gf: &M, r: f64, u: f64) -> Result<C64> {
    let x = [C64::new(r, 0.0), C64::new(u, 0.0)];
    Ok(curvature_at(gf, &x)?.gauss())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::SurfaceMetric;
    use crate::profile::Profile;
    use crate::scalar::{c64, Scalar};

    struct Flat5;
    impl MetricField<5> for Flat5 {
        fn matrix<S: Scalar>(&self, _x: &[S; 5]) -> [[S; 5]; 5] {
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { S::one() } else { S::zero() }))
        }
    }

    /// `dr² + r² du²`
    struct Polar;
    impl MetricField<2> for Polar {
        fn matrix<S: Scalar>(&self, x: &[S; 2]) -> [[S; 2]; 2] {
            [[S::one(), S::zero()], [S::zero(), x[0] * x[0]]]
        }
    }

    /// `dθ² + sin²θ dφ²`
    struct Sphere;
    impl MetricField<2> for Sphere {
        fn matrix<S: Scalar>(&self, x: &[S; 2]) -> [[S; 2]; 2] {
            let s = x[0].sin();
            [[S::one(), S::zero()], [S::zero(), s * s]]
        }
    }

    /// `diag(1, e^{2r})`
    struct Warped;
    impl MetricField<2> for Warped {
        fn matrix<S: Scalar>(&self, x: &[S; 2]) -> [[S; 2]; 2] {
            let e = (x[0] * c64(2.0, 0.0)).exp();
            [[S::one(), S::zero()], [S::zero(), e]]
        }
    }

    #[test]
    fn flat_metric_has_no_curvature() {
        let t = curvature_at(&Flat5, &[c64(0.1, 0.0); 5]).unwrap();
        assert_eq!(t.max_riemann(), 0.0);
        assert_eq!(t.max_weyl(), 0.0);
        assert_eq!(t.scalar, c64(0.0, 0.0));
    }

    #[test]
    fn polar_coordinates() {
        let t = curvature_at(&Polar, &[c64(0.7, 0.0), c64(0.2, 0.0)]).unwrap();
        assert!((t.gamma[0][1][1] - c64(-0.7, 0.0)).norm() < 1e-15);
        assert!((t.gamma[1][0][1] - c64(1.0 / 0.7, 0.0)).norm() < 1e-14);
        assert!(t.max_riemann() < 1e-14);
    }

    #[test]
    fn unit_sphere_has_k_one() {
        let k = gauss_curvature(&Sphere, 1.1, 0.3).unwrap();
        assert!((k - c64(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn christoffels_of_warped_metric() {
        // Γ^r_{uu} = −e^{2r}, Γ^u_{ru} = 1; K = −1
        let r = 0.35;
        let t = curvature_at(&Warped, &[c64(r, 0.0), c64(0.0, 0.0)]).unwrap();
        assert!((t.gamma[0][1][1] - c64(-(2.0 * r).exp(), 0.0)).norm() < 1e-10);
        assert!((t.gamma[1][0][1] - c64(1.0, 0.0)).norm() < 1e-10);
        assert!((t.gauss() - c64(-1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn surface_of_revolution_curvature() {
        // K = −h''/h = 1/9 for h = cos(r/3)
        let s = SurfaceMetric {
            h: Profile::Cos {
                amp: c64(1.3, 0.0),
                freq: c64(1.0 / 3.0, 0.0),
            },
        };
        let k = gauss_curvature(&s, 0.4, 0.0).unwrap();
        assert!((k - c64(1.0 / 9.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn singular_metric_rejected() {
        let s = SurfaceMetric {
            h: Profile::Cos {
                amp: c64(1.0, 0.0),
                freq: c64(1.0, 0.0),
            },
        };
        let err = gauss_curvature(&s, std::f64::consts::FRAC_PI_2, 0.0).unwrap_err();
        assert!(matches!(err, GeometryError::SingularMetric { .. }));
    }
}
