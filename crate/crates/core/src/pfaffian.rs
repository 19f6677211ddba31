//! The SU(2)-symmetric rank-3 Pfaffian systems on S³×Σ², the null
//! distributions they annihilate, and the bracket-generating test.

use std::collections::BTreeMap;

use crate::error::{GeometryError, Result};
use crate::forms::{d_coframe, decompose_two_form, pair_index, TwoFormCoeffs};
use crate::linalg::numerical_rank;
use crate::manifold::{su2_rows, Bracket, CoframeField, Coordinate, LeftInvariant, Point5, Sampler, VectorField, R, U};
use crate::metric::{metric_at, split_product_metric, FormSet};
use crate::profile::Profile;
use crate::scalar::{Scalar, C64};

pub const DEFAULT_SEED: u64 = 42;
/// Default residual tolerance for structure-equation checks.
pub const STRUCTURE_TOL: f64 = 1e-9;
/// Default relative singular-value threshold for rank decisions.
pub const RANK_TOL: f64 = 1e-7;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Constants `a₁, b₁, c₁, a₂, b₂, c₂, k` and the profile `f(r)` of one
/// Pfaffian system.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    pub a1: C64,
    pub b1: C64,
    pub c1: C64,
    pub a2: C64,
    pub b2: C64,
    pub c2: C64,
    pub k: C64,
    pub f: Profile,
}

impl SystemParams {
    /// Parameters with the default profile `f = k e^{-(c₂/a₂)(b₁/√(b₁²)) r}`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(a1: C64, b1: C64, c1: C64, a2: C64, b2: C64, c2: C64, k: C64) -> Result<Self> {
        if a2 == ZERO {
            return Err(GeometryError::InvalidParams(
                "a2 must be non-zero for the default f".into(),
            ));
        }
        let s = b1 / (b1 * b1).sqrt();
        let f = Profile::exp(k, -(c2 / a2) * s);
        Self::with_profile(a1, b1, c1, a2, b2, c2, k, f)
    }

    /// Parameters with an explicit profile `f`.
    #[allow(clippy::too_many_arguments)]
    pub fn with_profile(a1: C64, b1: C64, c1: C64, a2: C64, b2: C64, c2: C64, k: C64, f: Profile) -> Result<Self> {
        let p = Self {
            a1,
            b1,
            c1,
            a2,
            b2,
            c2,
            k,
            f,
        };
        p.validate()?;
        Ok(p)
    }

    /// The system with `b₁ = 1`, `a₁ = c₁ = b₂ = 0`.
    pub fn simplified(a2: C64, c2: C64, k: C64) -> Result<Self> {
        Self::new(ZERO, ONE, ZERO, a2, ZERO, c2, k)
    }

    /// Real shorthand for [`SystemParams::simplified`] with `k = 1`.
    pub fn real(a2: f64, c2: f64) -> Result<Self> {
        Self::simplified(C64::new(a2, 0.0), C64::new(c2, 0.0), ONE)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1() == ZERO {
            return Err(GeometryError::InvalidParams("a1² + b1² + c1² must be non-zero".into()));
        }
        if self.n2() == ZERO {
            return Err(GeometryError::InvalidParams("a2² + b2² + c2² must be non-zero".into()));
        }
        if self.k == ZERO {
            return Err(GeometryError::InvalidParams("k must be non-zero".into()));
        }
        Ok(())
    }

    pub fn n1(&self) -> C64 {
        (self.a1 * self.a1 + self.b1 * self.b1 + self.c1 * self.c1).sqrt()
    }

    pub fn n2(&self) -> C64 {
        (self.a2 * self.a2 + self.b2 * self.b2 + self.c2 * self.c2).sqrt()
    }

    /// `b₁/√(b₁²)` on the principal branch.
    pub fn b1_sign(&self) -> C64 {
        self.b1 / (self.b1 * self.b1).sqrt()
    }

    /// `a₁ = c₁ = b₂ = 0`.
    pub fn is_simplified(&self) -> bool {
        self.a1 == ZERO && self.c1 == ZERO && self.b2 == ZERO
    }

    /// Left-hand side of `f_r + (b₁/√(b₁²))(c₂/a₂) f = 0` at `r`.
    pub fn ode_residual(&self, r: f64) -> C64 {
        let rr = crate::scalar::Dual::new(C64::new(r, 0.0), ONE);
        let fd = self.f.eval(rr);
        fd.eps + self.b1_sign() * (self.c2 / self.a2) * fd.re
    }
}

/// The coframe `ω₁, …, ω₅` of a Pfaffian system.
#[derive(Clone, Copy, Debug)]
pub struct OmegaCoframe {
    pub params: SystemParams,
}

impl OmegaCoframe {
    pub fn new(params: SystemParams) -> Self {
        Self { params }
    }
}

impl CoframeField for OmegaCoframe {
    fn rows<S: Scalar>(&self, x: &[S; 5]) -> [[S; 5]; 5] {
        let p = &self.params;
        let (n1, n2) = (p.n1(), p.n2());
        let f = p.f.eval(x[R]);
        let s = su2_rows(x);
        let dr = [p.a1 / n1, p.b1 / n1, p.c1 / n1];
        let du = [p.a2 / n2, p.b2 / n2, p.c2 / n2];
        let mut rows = [[S::zero(); 5]; 5];
        for i in 0..3 {
            rows[i] = s[i];
            rows[i][R] = S::constant(dr[i]);
            rows[i][U] = f * du[i];
        }
        rows[3][R] = S::constant(p.b1 / n1);
        rows[4][U] = -(f * (p.a2 / n2));
        rows
    }
}

impl FormSet for OmegaCoframe {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]> {
        self.rows(x).to_vec()
    }
}

/// `ω₁..ω₅` at `p`, rejecting degenerate coframes.
pub fn omega_coframe(params: &SystemParams, p: &Point5) -> Result<[[C64; 5]; 5]> {
    let rows = OmegaCoframe::new(*params).at(p);
    let det = crate::linalg::det(&rows).norm();
    if det < 1e-12 {
        return Err(GeometryError::SingularCoframe { det });
    }
    Ok(rows)
}

/// `X₁ = a₁E¹ + b₁E² + c₁E³ − √(a₁²+b₁²+c₁²) ∂r` (index 1) or
/// `X₂ = a₂E¹ + b₂E² + c₂E³ − (√(a₂²+b₂²+c₂²)/f) ∂u` (index 2).
#[derive(Clone, Copy, Debug)]
pub struct DistributionField {
    pub params: SystemParams,
    pub index: usize,
}

impl VectorField for DistributionField {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        let p = &self.params;
        let (abc, tail, axis) = match self.index {
            1 => ([p.a1, p.b1, p.c1], S::constant(-p.n1()), R),
            2 => ([p.a2, p.b2, p.c2], S::constant(-p.n2()) / p.f.eval(x[R]), U),
            i => panic!("distribution field index must be 1 or 2, got {i}"),
        };
        let mut v = [S::zero(); 5];
        for (a, &c) in abc.iter().enumerate() {
            if c == ZERO {
                continue;
            }
            let e = LeftInvariant(a + 1).coeffs(x);
            for i in 0..5 {
                v[i] += e[i] * c;
            }
        }
        v[axis] += tail;
        v
    }
}

/// `(X₁, X₂)` at `p`.
pub fn distribution_fields(params: &SystemParams, p: &Point5) -> ([C64; 5], [C64; 5]) {
    (
        DistributionField {
            params: *params,
            index: 1,
        }
        .at(p),
        DistributionField {
            params: *params,
            index: 2,
        }
        .at(p),
    )
}

/// The split product metric `σ₁² + σ₂² + σ₃² − dr² − f² du²` at `p`.
pub fn gsplit_metric(params: &SystemParams, p: &Point5) -> [[C64; 5]; 5] {
    metric_at(&split_product_metric(params.f), p)
}

/// Outcome of the bracket-generating test.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub pass: bool,
    /// Max modulus, over sample points, of each coefficient that must vanish.
    pub residuals: BTreeMap<String, f64>,
    /// Smallest modulus seen of the coefficients that must not vanish.
    pub min_leading: f64,
    /// Coefficient of `ω₄∧ω₅` in `dω₃` at the first sample point.
    pub h: C64,
}

fn pattern(entries: &[((usize, usize), C64)]) -> TwoFormCoeffs {
    let mut t = TwoFormCoeffs::zero();
    for &((a, b), v) in entries {
        t.add(a, b, v);
    }
    t
}

/// The five structure equations of the `b₁ = 1` system, in the ω basis.
pub fn explicit_structure(params: &SystemParams) -> [TwoFormCoeffs; 5] {
    let q = params.c2 / params.a2;
    let h = (params.a2 * params.a2 + params.c2 * params.c2) / (params.a2 * params.a2);
    [
        pattern(&[((1, 2), ONE), ((1, 4), q), ((2, 3), ONE)]),
        pattern(&[((2, 0), ONE), ((0, 4), -q), ((2, 4), ONE)]),
        pattern(&[((0, 1), ONE), ((0, 3), -ONE), ((1, 4), -ONE), ((3, 4), h)]),
        TwoFormCoeffs::zero(),
        pattern(&[((3, 4), -q)]),
    ]
}

/// `dω_i` decomposed in the ω-wedge basis at `p`.
pub fn structure_coefficients(params: &SystemParams, p: &Point5) -> Result<[TwoFormCoeffs; 5]> {
    let frame = omega_coframe(params, p)?;
    let d = d_coframe(&OmegaCoframe::new(*params), &p.coords());
    let mut out = [TwoFormCoeffs::zero(); 5];
    for i in 0..5 {
        out[i] = decompose_two_form(&frame, &d[i])?;
    }
    Ok(out)
}

/// Bracket-generating test at `npoints` deterministic sample points.
pub fn check_structure_equations(params: &SystemParams, npoints: usize, tol: f64) -> StructureReport {
    let points = Sampler::new(DEFAULT_SEED).points(npoints.max(1));
    check_structure_equations_at(params, &points, tol)
}

/// Bracket-generating test at the given points.
///
/// Membership modulo `ω₁, ω₂` is read off the decomposition: the
/// coefficients on `ω₃∧ω₄, ω₃∧ω₅, ω₄∧ω₅` (the only basis elements free of
/// `ω₁, ω₂`) must be `(≠0, 0, 0)` for `dω₁` and `(0, ≠0, 0)` for `dω₂`;
/// `H` is the `ω₄∧ω₅` coefficient of `dω₃` and must not vanish.
pub fn check_structure_equations_at(params: &SystemParams, points: &[Point5], tol: f64) -> StructureReport {
    let mut residuals: BTreeMap<String, f64> = BTreeMap::new();
    let mut bump = |label: &str, v: f64| {
        let e = residuals.entry(label.to_string()).or_insert(0.0);
        *e = e.max(v);
    };
    let mut min_leading = f64::INFINITY;
    let mut h0 = None;
    let explicit =
        (params.is_simplified() && (params.b1_sign() - ONE).norm() < 1e-12).then(|| explicit_structure(params));

    for p in points {
        let coeffs = match structure_coefficients(params, p) {
            Ok(c) => c,
            Err(_) => {
                bump("coframe invertible", f64::INFINITY);
                continue;
            }
        };
        let [d1, d2, d3, _, _] = &coeffs;
        let c = |t: &TwoFormCoeffs, a: usize, b: usize| t.c[pair_index(a, b)];

        bump("dω1 mod ω1,ω2: ω3∧ω5", c(d1, 2, 4).norm());
        bump("dω1 mod ω1,ω2: ω4∧ω5", c(d1, 3, 4).norm());
        bump("dω2 mod ω1,ω2: ω3∧ω4", c(d2, 2, 3).norm());
        bump("dω2 mod ω1,ω2: ω4∧ω5", c(d2, 3, 4).norm());
        min_leading = min_leading.min(c(d1, 2, 3).norm()).min(c(d2, 2, 4).norm());

        let h = c(d3, 3, 4);
        min_leading = min_leading.min(h.norm());
        match h0 {
            None => h0 = Some(h),
            Some(h_first) if explicit.is_some() => bump("H constant", (h - h_first).norm()),
            Some(_) => {}
        }

        if let Some(expected) = &explicit {
            for (i, (got, want)) in coeffs.iter().zip(expected).enumerate() {
                bump(&format!("dω{} explicit", i + 1), got.minus(want).max_abs());
            }
        }
    }

    let h = h0.unwrap_or(ZERO);
    let pass = residuals.values().all(|&r| r < tol) && min_leading > tol && h.norm() > tol;
    StructureReport {
        pass,
        residuals,
        min_leading,
        h,
    }
}

/// Ranks of `D`, `[D,D]` and `[[D,D],D]` for `D = span{X₁, X₂}`.
pub fn growth_vector(params: &SystemParams, p: &Point5, rank_tol: f64) -> Result<(usize, usize, usize)> {
    let x1 = DistributionField {
        params: *params,
        index: 1,
    };
    let x2 = DistributionField {
        params: *params,
        index: 2,
    };
    growth_vector_of(&x1, &x2, p, rank_tol)
}

/// Growth vector of the distribution spanned by two arbitrary fields.
pub fn growth_vector_of<X, Y>(x1: &X, x2: &Y, p: &Point5, rank_tol: f64) -> Result<(usize, usize, usize)>
where
    X: VectorField,
    Y: VectorField,
{
    p.check_chart()?;
    let b12 = Bracket::new(x1, x2);
    let b121 = Bracket::new(&b12, x1);
    let b122 = Bracket::new(&b12, x2);
    let cols: Vec<Vec<C64>> = vec![
        x1.at(p).to_vec(),
        x2.at(p).to_vec(),
        b12.at(p).to_vec(),
        b121.at(p).to_vec(),
        b122.at(p).to_vec(),
    ];
    Ok((
        numerical_rank(&cols[..2], rank_tol),
        numerical_rank(&cols[..3], rank_tol),
        numerical_rank(&cols, rank_tol),
    ))
}

/// `∂r`, `∂u`: an integrable pair used as a reference distribution.
pub fn coordinate_pair() -> (Coordinate, Coordinate) {
    (Coordinate(R), Coordinate(U))
}
