//! The adapted coframe `θ₁..θ₅`, existence of the Cartan connection forms
//! `Ω₁..Ω₇`, the Nurowski metrics `g` and `g̃`, and the explicit metrics of
//! the two conformally flat families together with their sign-reversed and
//! real forms.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{GeometryError, Result};
use crate::forms::{d_coframe, decompose_two_form, pair_index};
use crate::linalg::{det, least_squares, Mat};
use crate::manifold::{su2_rows, CoframeField, Point5, R, U};
use crate::metric::{FormSet, MetricField, QuadraticMetric, SurfaceMetric};
use crate::pfaffian::{OmegaCoframe, SystemParams};
use crate::profile::Profile;
use crate::scalar::{c64, Scalar, C64, I};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// `θ₁..θ₅` built from `ω₁..ω₅`:
///
/// ```text
/// θ₁ = ω₁, θ₂ = ω₂, θ₃ = λω₃,
/// θ₄ = λ⁻¹ω₄ + Pω₁ + Qω₂ + Rω₃,
/// θ₅ = λ⁻¹ω₅ + Sω₁ + Tω₂ + Uω₃.
/// ```
#[derive(Clone, Copy, Debug)]
pub struct AdaptedCoframe {
    pub params: SystemParams,
    pub lambda: C64,
    pub p: C64,
    pub q: C64,
    pub r: C64,
    pub s: C64,
    pub t: C64,
    pub u: C64,
}

/// `λ = (a₂²/(a₂²+c₂²))^{1/3}` on the principal branch.
pub fn lambda(a2: C64, c2: C64) -> C64 {
    (a2 * a2 / (a2 * a2 + c2 * c2)).powf(1.0 / 3.0)
}

/// `Q = −(1/10)(7a₂²+3c₂²)/(a₂^{2/3}(a₂²+c₂²)^{2/3})`.
pub fn q_constant(a2: C64, c2: C64) -> C64 {
    let (a, c) = (a2 * a2, c2 * c2);
    -(7.0 * a + 3.0 * c) / (10.0 * a2.powf(2.0 / 3.0) * (a + c).powf(2.0 / 3.0))
}

impl AdaptedCoframe {
    /// The normalized coframe `P = R = T = U = 0`, `S = −Q`.
    ///
    /// Requires the simplified system with `a₂` real and positive and `c₂`
    /// real, so that every fractional power is real.
    pub fn new(params: SystemParams) -> Result<Self> {
        if !params.is_simplified() || params.b1 != ONE {
            return Err(GeometryError::InvalidParams(
                "the adapted coframe needs b1 = 1 and a1 = c1 = b2 = 0".into(),
            ));
        }
        let (a2, c2) = (params.a2, params.c2);
        if a2.im != 0.0 || a2.re <= 0.0 || c2.im != 0.0 {
            return Err(GeometryError::BranchRestriction(format!(
                "the adapted coframe needs real a2 > 0 and real c2, got a2 = {a2}, c2 = {c2}"
            )));
        }
        let q = q_constant(a2, c2);
        Ok(Self {
            params,
            lambda: lambda(a2, c2),
            p: ZERO,
            q,
            r: ZERO,
            s: -q,
            t: ZERO,
            u: ZERO,
        })
    }

    /// The same coframe with `Q` replaced (and `S` left as is).
    pub fn with_q(mut self, q: C64) -> Self {
        self.q = q;
        self
    }
}

impl CoframeField for AdaptedCoframe {
    fn rows<S: Scalar>(&self, x: &[S; 5]) -> [[S; 5]; 5] {
        let w = OmegaCoframe::new(self.params).rows(x);
        let inv = ONE / self.lambda;
        let combo = |base: usize, coeffs: [C64; 3]| -> [S; 5] {
            std::array::from_fn(|a| w[base][a] * inv + w[0][a] * coeffs[0] + w[1][a] * coeffs[1] + w[2][a] * coeffs[2])
        };
        [
            w[0],
            w[1],
            w[2].map(|v| v * self.lambda),
            combo(3, [self.p, self.q, self.r]),
            combo(4, [self.s, self.t, self.u]),
        ]
    }
}

impl FormSet for AdaptedCoframe {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]> {
        self.rows(x).to_vec()
    }
}

/// The adapted coframe of a system (field form; evaluate with `.at(p)`).
pub fn adapted_coframe(params: &SystemParams) -> Result<AdaptedCoframe> {
    AdaptedCoframe::new(*params)
}

/// Least-squares solution for `Ω₁..Ω₇` at one point.
#[derive(Clone, Debug)]
pub struct ConnectionSolution {
    /// `omega_conn[k][m]`: coefficient of `θ_m` in `Ω_{k+1}`.
    pub omega_conn: [[C64; 5]; 7],
    /// Max coefficient mismatch of the five structure equations.
    pub residual: f64,
}

/// One term `coef · θ_j ∧ Ω_k` of a structure equation.
struct Term {
    theta: usize,
    coef: f64,
    omega: usize,
}

const fn t(theta: usize, coef: f64, omega: usize) -> Term {
    Term { theta, coef, omega }
}

/// The right-hand sides of the five Cartan structure equations: terms
/// `θ_j ∧ Ω_k` and the constant `θ_a ∧ θ_b`.
const CARTAN: [(&[Term], (usize, usize)); 5] = [
    (&[t(0, 2.0, 0), t(0, 1.0, 3), t(1, 1.0, 1)], (2, 3)),
    (&[t(0, 1.0, 2), t(1, 1.0, 0), t(1, 2.0, 3)], (2, 4)),
    (&[t(0, 1.0, 4), t(1, 1.0, 5), t(2, 1.0, 0), t(2, 1.0, 3)], (3, 4)),
    (&[t(0, 1.0, 6), t(2, 4.0 / 3.0, 5), t(3, 1.0, 0), t(4, 1.0, 1)], (0, 0)),
    (&[t(1, 1.0, 6), t(2, -4.0 / 3.0, 4), t(3, 1.0, 2), t(4, 1.0, 3)], (0, 0)),
];

/// Solve the 50 × 35 linear system for the θ-basis coefficients of
/// `Ω₁..Ω₇` at `p`.
pub fn solve_connection_forms(ac: &AdaptedCoframe, p: &Point5) -> Result<ConnectionSolution> {
    let theta = ac.at(p);
    let dtheta = d_coframe(ac, &p.coords());
    let mut a = DMatrix::<C64>::zeros(50, 35);
    let mut b = vec![ZERO; 50];
    for (eq, (terms, constant)) in CARTAN.iter().enumerate() {
        let lhs = decompose_two_form(&theta, &dtheta[eq])?;
        for (pi, v) in lhs.c.iter().enumerate() {
            b[eq * 10 + pi] = *v;
        }
        if constant.0 != constant.1 {
            b[eq * 10 + pair_index(constant.0, constant.1)] -= ONE;
        }
        for term in terms.iter() {
            for m in 0..5 {
                if m == term.theta {
                    continue;
                }
                let (lo, hi, sign) = if term.theta < m {
                    (term.theta, m, 1.0)
                } else {
                    (m, term.theta, -1.0)
                };
                a[(eq * 10 + pair_index(lo, hi), term.omega * 5 + m)] += c64(sign * term.coef, 0.0);
            }
        }
    }
    let (x, residual) = least_squares(&a, &b);
    let mut omega_conn = [[ZERO; 5]; 7];
    for k in 0..7 {
        for m in 0..5 {
            omega_conn[k][m] = x[k * 5 + m];
        }
    }
    Ok(ConnectionSolution { omega_conn, residual })
}

/// `g = 2θ₁θ₅ − 2θ₂θ₄ + (4/3)θ₃θ₃`.
pub fn nurowski_metric_g(params: &SystemParams) -> Result<QuadraticMetric<AdaptedCoframe>> {
    let ac = AdaptedCoframe::new(*params)?;
    Ok(QuadraticMetric::new(
        ac,
        vec![
            (0, 4, c64(2.0, 0.0)),
            (1, 3, c64(-2.0, 0.0)),
            (2, 2, c64(4.0 / 3.0, 0.0)),
        ],
    ))
}

/// The coefficients `(ω₃ω₃, ω₁ω₁ = ω₂ω₂)` of `g̃`.
pub fn gtilde_coefficients(a2: C64, c2: C64) -> Result<(C64, C64)> {
    let (a, c) = (a2 * a2, c2 * c2);
    if a2 == ZERO {
        return Err(GeometryError::InvalidParams("a2 must be non-zero".into()));
    }
    if (a + c).norm() < 1e-14 {
        return Err(GeometryError::DegenerateParams("a2² + c2² = 0".into()));
    }
    let rho = a / (a + c);
    Ok((rho * (4.0 / 3.0), rho * (7.0 * a + 3.0 * c) / (5.0 * a)))
}

/// `g̃ = 2ω₁ω₅ − 2ω₂ω₄ + (4/3)ρ ω₃ω₃ + (1/5)ρ((7a₂²+3c₂²)/a₂²)(ω₁ω₁+ω₂ω₂)`
/// with `ρ = a₂²/(a₂²+c₂²)`.
pub fn nurowski_metric_gtilde(params: &SystemParams) -> Result<QuadraticMetric<OmegaCoframe>> {
    let (c33, c11) = gtilde_coefficients(params.a2, params.c2)?;
    Ok(QuadraticMetric::new(
        OmegaCoframe::new(*params),
        vec![
            (0, 4, c64(2.0, 0.0)),
            (1, 3, c64(-2.0, 0.0)),
            (2, 2, c33),
            (0, 0, c11),
            (1, 1, c11),
        ],
    ))
}

/// `−(1/300)(9a₂²+c₂²)(a₂²+9c₂²)/(a₂^{8/3}(a₂²+c₂²)^{2/3})`.
pub fn w2424_closed_form(a2: C64, c2: C64) -> C64 {
    let (a, c) = (a2 * a2, c2 * c2);
    -(9.0 * a + c) * (a + 9.0 * c) / (300.0 * a2.powf(8.0 / 3.0) * (a + c).powf(2.0 / 3.0))
}

/// The `(θ₂, θ₄, θ₂, θ₄)` frame component of the Weyl tensor of `g`.
pub fn w2424(params: &SystemParams, p: &Point5) -> Result<C64> {
    let g = nurowski_metric_g(params)?;
    crate::curvature::weyl_frame_component(&g, &g.forms, (1, 3, 1, 3), p)
}

/// The two conformally flat families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `a₂² + 9c₂² = 0`
    A,
    /// `9a₂² + c₂² = 0`
    B,
}

/// Upper (`Minus`, `f = e^{−…}`) or lower (`Plus`) choice of the `∓` sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `+1` for the upper sign of `±`, i.e. for `Minus`.
    pub fn upper(self) -> f64 {
        match self {
            Sign::Minus => 1.0,
            Sign::Plus => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Complex,
    Real,
}

/// The distribution `D` or its sign-reversed companion `D̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    D,
    SignReversed,
}

macro_rules! parse_enum {
    ($ty:ty, $what:literal, $($text:literal => $val:expr),+ $(,)?) => {
        impl FromStr for $ty {
            type Err = GeometryError;
            fn from_str(s: &str) -> Result<Self> {
                match s.to_ascii_lowercase().as_str() {
                    $($text => Ok($val),)+
                    other => Err(GeometryError::InvalidParams(format!("unknown {}: {other}", $what))),
                }
            }
        }
    };
}

parse_enum!(Case, "case", "a" => Case::A, "b" => Case::B);
parse_enum!(Sign, "sign", "minus" => Sign::Minus, "plus" => Sign::Plus);
parse_enum!(Variant, "variant", "complex" => Variant::Complex, "real" => Variant::Real);
parse_enum!(System, "system", "d" => System::D, "sign-reversed" => System::SignReversed);

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::A => "A",
            Case::B => "B",
        })
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Complex => "complex",
            Variant::Real => "real",
        })
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::D => "D",
            System::SignReversed => "sign-reversed",
        })
    }
}

/// One of the explicit systems of the conformally flat families. The sign
/// is ignored for the real variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseSpec {
    pub case: Case,
    pub sign: Sign,
    pub variant: Variant,
    pub system: System,
}

impl CaseSpec {
    pub fn new(case: Case, sign: Sign, variant: Variant, system: System) -> Self {
        Self {
            case,
            sign,
            variant,
            system,
        }
    }

    /// Every distinct spec (real specs with sign `Minus` only).
    pub fn all() -> Vec<CaseSpec> {
        let mut out = Vec::new();
        for case in [Case::A, Case::B] {
            for system in [System::D, System::SignReversed] {
                for sign in [Sign::Minus, Sign::Plus] {
                    out.push(CaseSpec::new(case, sign, Variant::Complex, system));
                }
                out.push(CaseSpec::new(case, Sign::Minus, Variant::Real, system));
            }
        }
        out
    }

    pub fn label(&self) -> String {
        match self.variant {
            Variant::Complex => format!("{}/{}/{}/{}", self.case, self.sign, self.variant, self.system),
            Variant::Real => format!("{}/{}/{}", self.case, self.variant, self.system),
        }
    }

    /// `c₂` of the complex system with `a₂ = 1`: `±i/3` (A) or `±3i` (B).
    pub fn c2(&self) -> C64 {
        let s = self.sign.upper();
        match self.case {
            Case::A => I * (s / 3.0),
            Case::B => I * (3.0 * s),
        }
    }

    /// The equivalent [`SystemParams`] (`a₂ = k = 1`) of the complex variant.
    pub fn system_params(&self) -> Result<SystemParams> {
        SystemParams::simplified(ONE, self.c2(), ONE)
    }

    /// `ω₁ = σ₁ + α(r) du`, `ω₃ = σ₃ + γ(r) du`, `ω₅ = −α(r) du`.
    pub fn profiles(&self) -> (Profile, Profile) {
        let s = self.sign.upper();
        let k = 1.0 / (2.0 * SQRT_2);
        match (self.case, self.variant) {
            (Case::A, Variant::Complex) => {
                let rate = I * (-s / 3.0);
                (Profile::exp(c64(3.0 * k, 0.0), rate), Profile::exp(I * (s * k), rate))
            }
            (Case::B, Variant::Complex) => {
                let rate = I * (-3.0 * s);
                (Profile::exp(I * (-k), rate), Profile::exp(c64(3.0 * s * k, 0.0), rate))
            }
            (Case::A, Variant::Real) => (
                Profile::Cos {
                    amp: c64(3.0 * k, 0.0),
                    freq: c64(1.0 / 3.0, 0.0),
                },
                Profile::Sin {
                    amp: c64(k, 0.0),
                    freq: c64(1.0 / 3.0, 0.0),
                },
            ),
            (Case::B, Variant::Real) => (
                Profile::Cos {
                    amp: c64(-k, 0.0),
                    freq: c64(3.0, 0.0),
                },
                Profile::Sin {
                    amp: c64(-3.0 * k, 0.0),
                    freq: c64(3.0, 0.0),
                },
            ),
        }
    }

    /// The conformal factor `Ω(r)` making the case A metric Ricci-flat:
    /// `e^{±ir/3}`, the sign opposite to that of `f`.
    pub fn phase_factor(&self) -> Result<Profile> {
        match (self.case, self.variant) {
            (Case::A, Variant::Complex) => Ok(Profile::exp(ONE, I * (self.sign.upper() / 3.0))),
            _ => Err(GeometryError::UnsupportedCase(format!(
                "a Ricci-flat phase factor is only available for the complex case A, not {}",
                self.label()
            ))),
        }
    }

    /// Coefficients `(c₃, c₁)` of `ω₃ω₃` and `ω₁ω₁ + ω₂ω₂` in `g̃`.
    pub fn gm_coefficients(&self) -> (C64, C64) {
        match self.case {
            Case::A => (c64(1.5, 0.0), c64(1.5, 0.0)),
            Case::B => (c64(-1.0 / 6.0, 0.0), c64(0.5, 0.0)),
        }
    }
}

/// Index of each one-form in [`CaseForms`].
pub mod form {
    pub const W1: usize = 0;
    pub const W2: usize = 1;
    pub const W3: usize = 2;
    pub const W4: usize = 3;
    pub const W5: usize = 4;
    pub const WB1: usize = 5;
    pub const WB2: usize = 6;
    pub const WB3: usize = 7;
    pub const S1: usize = 8;
    pub const S2: usize = 9;
}

/// `ω₁..ω₅, ω̄₁, ω̄₂, ω̄₃, σ₁, σ₂` of one case.
#[derive(Clone, Copy, Debug)]
pub struct CaseForms {
    pub spec: CaseSpec,
}

impl FormSet for CaseForms {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]> {
        let (alpha, gamma) = self.spec.profiles();
        let (a, g) = (alpha.eval(x[R]), gamma.eval(x[R]));
        let s = su2_rows(x);
        let z = S::zero();
        let mut w1 = s[0];
        w1[U] += a;
        let mut w2 = s[1];
        w2[R] += S::one();
        let mut w3 = s[2];
        w3[U] += g;
        let mut w4 = [z; 5];
        w4[R] = S::one();
        let mut w5 = [z; 5];
        w5[U] = -a;
        let mut wb1 = s[0];
        wb1[U] += -a;
        let mut wb2 = s[1];
        wb2[R] += -S::one();
        vec![w1, w2, w3, w4, w5, wb1, wb2, w3, s[0], s[1]]
    }
}

/// Rows of the system: `ω₁..ω₅` for `D`, `ω̄₁, ω̄₂, ω̄₃, ω₄, ω₅` for `D̃`.
#[derive(Clone, Copy, Debug)]
pub struct CaseCoframe {
    pub spec: CaseSpec,
}

impl CoframeField for CaseCoframe {
    fn rows<S: Scalar>(&self, x: &[S; 5]) -> [[S; 5]; 5] {
        use form::*;
        let f = CaseForms { spec: self.spec }.forms(x);
        match self.spec.system {
            System::D => [f[W1], f[W2], f[W3], f[W4], f[W5]],
            System::SignReversed => [f[WB1], f[WB2], f[WB3], f[W4], f[W5]],
        }
    }
}

/// The case coframe at `p`.
pub fn case_coframe(spec: &CaseSpec, p: &Point5) -> Mat<5> {
    CaseCoframe { spec: *spec }.at(p)
}

fn terms(list: &[(usize, usize, f64)]) -> Vec<(usize, usize, C64)> {
    list.iter().map(|&(i, j, c)| (i, j, c64(c, 0.0))).collect()
}

/// Metric of one case in its diagonal split form:
///
/// ```text
/// A, D : −2(ω₄ω₄+ω₅ω₅) + ½(ω̄₁ω̄₁+ω̄₂ω̄₂+ω̄₃ω̄₃) + (ω₁ω₁+ω₂ω₂+ω₃ω₃)
/// A, D̃ : the same with ωᵢ ↔ ω̄ᵢ
/// B, D : −2(ω₄ω₄+ω₅ω₅) + ½ω̄₁ω̄₁ + ½ω̄₂ω̄₂ − (1/6)ω̄₃ω̄₃
/// B, D̃ : the same with ωᵢ ↔ ω̄ᵢ
/// ```
pub fn case_metric(spec: &CaseSpec) -> QuadraticMetric<CaseForms> {
    use form::*;
    let (own, other) = match spec.system {
        System::D => ([W1, W2, W3], [WB1, WB2, WB3]),
        System::SignReversed => ([WB1, WB2, WB3], [W1, W2, W3]),
    };
    let mut list = vec![(W4, W4, -2.0), (W5, W5, -2.0)];
    match spec.case {
        Case::A => {
            list.extend(other.iter().map(|&i| (i, i, 0.5)));
            list.extend(own.iter().map(|&i| (i, i, 1.0)));
        }
        Case::B => {
            list.extend([
                (other[0], other[0], 0.5),
                (other[1], other[1], 0.5),
                (other[2], other[2], -1.0 / 6.0),
            ]);
        }
    }
    QuadraticMetric::new(CaseForms { spec: *spec }, terms(&list))
}

/// Metric of one case in the form `2ω₁ω₅ − 2ω₂ω₄ + c₃ω₃ω₃ + c₁(ω₁ω₁+ω₂ω₂)`
/// read from `g̃`. For `D̃` the roles are played by `ω̄₁, ω̄₂, ω̄₃` with
/// completion `−ω₄, −ω₅`.
pub fn case_metric_gm(spec: &CaseSpec) -> QuadraticMetric<CaseForms> {
    use form::*;
    let (c3, c1) = spec.gm_coefficients();
    let (one, two, three, sign) = match spec.system {
        System::D => (W1, W2, W3, 1.0),
        System::SignReversed => (WB1, WB2, WB3, -1.0),
    };
    let mut list = terms(&[(one, W5, 2.0 * sign), (two, W4, -2.0 * sign)]);
    list.extend([(three, three, c3), (one, one, c1), (two, two, c1)]);
    QuadraticMetric::new(CaseForms { spec: *spec }, list)
}

/// The intermediate diagonal form of the `D` metric, written with
/// `σ₁ + ω₅` and `σ₂ − ω₄`:
///
/// ```text
/// −2(ω₄ω₄+ω₅ω₅) + ½(σ₁+ω₅)(σ₁+ω₅) + ½(σ₂−ω₄)(σ₂−ω₄) + c₃ω₃ω₃ [+ ω₁ω₁ + ω₂ω₂ for A]
/// ```
pub fn case_metric_sigma(spec: &CaseSpec) -> Result<QuadraticMetric<SigmaForms>> {
    if spec.system != System::D {
        return Err(GeometryError::UnsupportedCase(format!(
            "the σ-diagonal form is only defined for D, not {}",
            spec.label()
        )));
    }
    let (c3, _) = spec.gm_coefficients();
    let mut list = terms(&[(3, 3, -2.0), (4, 4, -2.0), (5, 5, 0.5), (6, 6, 0.5)]);
    list.push((2, 2, c3));
    if spec.case == Case::A {
        list.extend(terms(&[(0, 0, 1.0), (1, 1, 1.0)]));
    }
    Ok(QuadraticMetric::new(SigmaForms { spec: *spec }, list))
}

/// `ω₁..ω₅, σ₁+ω₅, σ₂−ω₄`, with the last two built from σ directly.
#[derive(Clone, Copy, Debug)]
pub struct SigmaForms {
    pub spec: CaseSpec,
}

impl FormSet for SigmaForms {
    fn forms<S: Scalar>(&self, x: &[S; 5]) -> Vec<[S; 5]> {
        use form::*;
        let f = CaseForms { spec: self.spec }.forms(x);
        let p1: [S; 5] = std::array::from_fn(|a| f[S1][a] + f[W5][a]);
        let p2: [S; 5] = std::array::from_fn(|a| f[S2][a] - f[W4][a]);
        vec![f[W1], f[W2], f[W3], f[W4], f[W5], p1, p2]
    }
}

/// `ω₄ω₄ + ω₅ω₅` of a real case as a surface metric `dr² + h(r)² du²`.
pub fn case_surface_metric(case: Case) -> SurfaceMetric {
    let spec = CaseSpec::new(case, Sign::Minus, Variant::Real, System::D);
    SurfaceMetric { h: spec.profiles().0 }
}

/// Largest entry of `a − b` for two five-dimensional metrics at `p`.
pub fn metric_difference<A, B>(a: &A, b: &B, p: &Point5) -> f64
where
    A: MetricField<5> + ?Sized,
    B: MetricField<5> + ?Sized,
{
    let x = p.coords();
    crate::linalg::max_diff(&a.matrix(&x), &b.matrix(&x))
}

/// `|det g|` at `p`.
pub fn metric_det<M: MetricField<5> + ?Sized>(g: &M, p: &Point5) -> f64 {
    det(&g.matrix(&p.coords())).norm()
}
