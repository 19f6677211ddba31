//! SU(2) gauge connections over Σ² read off from the maximally symmetric
//! distributions: Pauli representation, potentials, covariant derivatives on
//! spinor doublets, field strengths and bracket tables.
//!
//! Operators have the form `a(r)∂r + b(r)∂u + M(r)` with `M` a 2×2 matrix.
//! Every coefficient is an [`ExpPoly`] (a finite sum `Σ cₖ e^{λₖ r}`), which
//! is closed under products and differentiation, so brackets of brackets are
//! exact.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{GeometryError, Result};
use crate::manifold::{lie_bracket, su2_coframe, LeftInvariant, Point5, VectorField, R, U};
use crate::nurowski::{Case, Sign};
use crate::scalar::{c64, Scalar, C64, I};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A 2×2 complex matrix.
pub type SpinMatrix = [[C64; 2]; 2];

/// `E^a ↦ (i/2)σ_a`.
pub fn pauli_rep(a: usize) -> SpinMatrix {
    let h = c64(0.5, 0.0);
    let ih = c64(0.0, 0.5);
    match a {
        1 => [[ZERO, ih], [ih, ZERO]],
        2 => [[ZERO, h], [-h, ZERO]],
        3 => [[ih, ZERO], [ZERO, -ih]],
        _ => panic!("Pauli index must be 1, 2 or 3, got {a}"),
    }
}

pub fn mat_mul(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

pub fn commutator(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    std::array::from_fn(|i| std::array::from_fn(|j| ab[i][j] - ba[i][j]))
}

/// `Σ w_a E^a`.
pub fn from_components(w: [C64; 3]) -> SpinMatrix {
    let mut m = [[ZERO; 2]; 2];
    for (a, &c) in w.iter().enumerate() {
        let e = pauli_rep(a + 1);
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] += c * e[i][j];
            }
        }
    }
    m
}

/// Components `w_a` of `m = Σ w_a E^a` (`tr(E^a E^b) = −½δ_ab`).
pub fn components(m: &SpinMatrix) -> [C64; 3] {
    std::array::from_fn(|a| {
        let p = mat_mul(&pauli_rep(a + 1), m);
        (p[0][0] + p[1][1]) * -2.0
    })
}

pub fn mat_max_diff(a: &SpinMatrix, b: &SpinMatrix) -> f64 {
    let mut m = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

/// `Σ amp · e^{rate·r}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExpPoly {
    pub terms: Vec<(C64, C64)>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C64) -> Self {
        Self::exp(c, ZERO)
    }

    pub fn exp(amp: C64, rate: C64) -> Self {
        Self {
            terms: vec![(amp, rate)],
        }
        .normalized()
    }

    /// `amp · cos(freq·r)`
    pub fn cos(amp: C64, freq: f64) -> Self {
        let h = amp * 0.5;
        Self {
            terms: vec![(h, I * freq), (h, -I * freq)],
        }
        .normalized()
    }

    /// `amp · sin(freq·r)`
    pub fn sin(amp: C64, freq: f64) -> Self {
        let h = amp / (I * 2.0);
        Self {
            terms: vec![(h, I * freq), (-h, -I * freq)],
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        let mut out: Vec<(C64, C64)> = Vec::with_capacity(self.terms.len());
        for (a, r) in self.terms.drain(..) {
            match out.iter_mut().find(|(_, q)| *q == r) {
                Some(t) => t.0 += a,
                None => out.push((a, r)),
            }
        }
        out.retain(|(a, _)| *a != ZERO);
        Self { terms: out }
    }

    pub fn eval<S: Scalar>(&self, r: S) -> S {
        let mut acc = S::zero();
        for &(a, rate) in &self.terms {
            acc += (r * rate).exp() * a;
        }
        acc
    }

    pub fn at(&self, r: f64) -> C64 {
        self.eval(c64(r, 0.0))
    }

    pub fn derivative(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|&(a, r)| (a * r, r)).collect(),
        }
        .normalized()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            terms: self.terms.iter().chain(&o.terms).copied().collect(),
        }
        .normalized()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-ONE))
    }

    pub fn scale(&self, k: C64) -> Self {
        Self {
            terms: self.terms.iter().map(|&(a, r)| (a * k, r)).collect(),
        }
        .normalized()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for &(a, r) in &self.terms {
            for &(b, s) in &o.terms {
                terms.push((a * b, r + s));
            }
        }
        Self { terms }.normalized()
    }
}

/// A 2×2 matrix of [`ExpPoly`] entries.
pub type PolyMatrix = [[ExpPoly; 2]; 2];

fn poly_matrix_zero() -> PolyMatrix {
    Default::default()
}

fn poly_from_components(w: &[ExpPoly; 3]) -> PolyMatrix {
    let mut m = poly_matrix_zero();
    for (a, c) in w.iter().enumerate() {
        let e = pauli_rep(a + 1);
        for i in 0..2 {
            for j in 0..2 {
                if e[i][j] != ZERO {
                    m[i][j] = m[i][j].add(&c.scale(e[i][j]));
                }
            }
        }
    }
    m
}

fn poly_commutator(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let ab = a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
            let ba = b[i][0].mul(&a[0][j]).add(&b[i][1].mul(&a[1][j]));
            ab.sub(&ba)
        })
    })
}

fn poly_map(m: &PolyMatrix, f: impl Fn(&ExpPoly) -> ExpPoly) -> PolyMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| f(&m[i][j])))
}

fn poly_zip(a: &PolyMatrix, b: &PolyMatrix, f: impl Fn(&ExpPoly, &ExpPoly) -> ExpPoly) -> PolyMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| f(&a[i][j], &b[i][j])))
}

/// `a(r)∂r + b(r)∂u + M(r)` acting on spinor doublets.
#[derive(Clone, Debug, Default)]
pub struct Operator {
    pub dr: ExpPoly,
    pub du: ExpPoly,
    pub m: PolyMatrix,
}

impl Operator {
    /// `∂μ + W_{μa}E^a` (`μ = 0` for `r`, `1` for `u`).
    pub fn covariant(mu: usize, w: &[ExpPoly; 3]) -> Self {
        let one = ExpPoly::constant(ONE);
        let (dr, du) = if mu == 0 {
            (one, ExpPoly::zero())
        } else {
            (ExpPoly::zero(), one)
        };
        Self {
            dr,
            du,
            m: poly_from_components(w),
        }
    }

    /// A pure matrix operator `Σ w_a E^a`.
    pub fn matrix(w: &[ExpPoly; 3]) -> Self {
        Self {
            dr: ExpPoly::zero(),
            du: ExpPoly::zero(),
            m: poly_from_components(w),
        }
    }

    /// `ρ(r)·self`.
    pub fn scaled(&self, rho: &ExpPoly) -> Self {
        Self {
            dr: self.dr.mul(rho),
            du: self.du.mul(rho),
            m: poly_map(&self.m, |e| e.mul(rho)),
        }
    }

    /// `[self, o]` for operators whose coefficients depend on `r` only.
    pub fn bracket(&self, o: &Self) -> Self {
        let dr = self.dr.mul(&o.dr.derivative()).sub(&o.dr.mul(&self.dr.derivative()));
        let du = self.dr.mul(&o.du.derivative()).sub(&o.dr.mul(&self.du.derivative()));
        let lhs = poly_map(&o.m, |e| self.dr.mul(&e.derivative()));
        let rhs = poly_map(&self.m, |e| o.dr.mul(&e.derivative()));
        let m = poly_zip(
            &poly_zip(&lhs, &rhs, |a, b| a.sub(b)),
            &poly_commutator(&self.m, &o.m),
            |a, b| a.add(b),
        );
        Self { dr, du, m }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            dr: self.dr.add(&o.dr),
            du: self.du.add(&o.du),
            m: poly_zip(&self.m, &o.m, |a, b| a.add(b)),
        }
    }

    /// Numeric value `(a, b, M)` at `r`.
    pub fn at(&self, r: f64) -> (C64, C64, SpinMatrix) {
        (
            self.dr.at(r),
            self.du.at(r),
            self.m.clone().map(|row| row.map(|e| e.at(r))),
        )
    }

    /// `|a| + |b|` plus the largest matrix entry at `r`.
    pub fn max_abs(&self, r: f64) -> f64 {
        let (a, b, m) = self.at(r);
        a.norm().max(b.norm()).max(mat_max_diff(&m, &[[ZERO; 2]; 2]))
    }
}

/// Which connection of a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaugeVariant {
    Complex,
    Real,
    SignReversed,
}

impl FromStr for GaugeVariant {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "complex" => Ok(GaugeVariant::Complex),
            "real" => Ok(GaugeVariant::Real),
            "sign-reversed" => Ok(GaugeVariant::SignReversed),
            other => Err(GeometryError::InvalidParams(format!("unknown variant: {other}"))),
        }
    }
}

impl fmt::Display for GaugeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaugeVariant::Complex => "complex",
            GaugeVariant::Real => "real",
            GaugeVariant::SignReversed => "sign-reversed",
        })
    }
}

/// One connection. The sign is ignored for the real variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaugeCase {
    pub case: Case,
    pub sign: Sign,
    pub variant: GaugeVariant,
}

impl GaugeCase {
    pub fn new(case: Case, sign: Sign, variant: GaugeVariant) -> Self {
        Self { case, sign, variant }
    }

    /// Every supported connection (real variants once, with sign `Minus`).
    pub fn all() -> Vec<GaugeCase> {
        let mut out = Vec::new();
        for sign in [Sign::Minus, Sign::Plus] {
            out.push(GaugeCase::new(Case::A, sign, GaugeVariant::Complex));
            out.push(GaugeCase::new(Case::B, sign, GaugeVariant::Complex));
            out.push(GaugeCase::new(Case::A, sign, GaugeVariant::SignReversed));
        }
        out.push(GaugeCase::new(Case::A, Sign::Minus, GaugeVariant::Real));
        out.push(GaugeCase::new(Case::B, Sign::Minus, GaugeVariant::Real));
        out
    }

    pub fn label(&self) -> String {
        match self.variant {
            GaugeVariant::Real => format!("{}/real", self.case),
            v => format!("{}/{}/{}", self.case, self.sign, v),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.case == Case::B && self.variant == GaugeVariant::SignReversed {
            return Err(GeometryError::UnsupportedCase(
                "no sign-reversed connection is constructed for case B".into(),
            ));
        }
        Ok(())
    }

    /// `e^{∓ikr}` with `k = 1/3` (A) or `3` (B).
    fn phase(&self, power: f64) -> ExpPoly {
        ExpPoly::exp(ONE, I * (-self.sign.upper() * self.freq() * power))
    }

    fn freq(&self) -> f64 {
        match self.case {
            Case::A => 1.0 / 3.0,
            Case::B => 3.0,
        }
    }
}

/// `W_{μa}` for `μ = 0, 1` and `a = 1, 2, 3`.
#[derive(Clone, Debug)]
pub struct GaugePotential {
    pub w: [[ExpPoly; 3]; 2],
}

impl GaugePotential {
    /// Numeric `W_{μa}` at `r`.
    pub fn at(&self, r: f64) -> [[C64; 3]; 2] {
        self.w.clone().map(|row| row.map(|e| e.at(r)))
    }

    /// `A_μ = W_{μa}E^a` at `r`.
    pub fn matrix(&self, mu: usize, r: f64) -> SpinMatrix {
        from_components(self.at(r)[mu])
    }
}

/// The potentials of a connection.
pub fn gauge_potential(gc: &GaugeCase) -> Result<GaugePotential> {
    gc.validate()?;
    let s = gc.sign.upper();
    let k = 1.0 / (2.0 * SQRT_2);
    let zero = ExpPoly::zero;
    let e2 = |c: f64| ExpPoly::constant(c64(c, 0.0));
    let w = match (gc.case, gc.variant) {
        (Case::A, GaugeVariant::Complex) => {
            let f = gc.phase(1.0).scale(c64(-3.0 * k, 0.0));
            [[zero(), e2(-1.0), zero()], [f.clone(), zero(), f.scale(I * (s / 3.0))]]
        }
        (Case::B, GaugeVariant::Complex) => {
            let f = gc.phase(1.0).scale(I * k);
            [[zero(), e2(-1.0), zero()], [f.clone(), zero(), f.scale(I * (3.0 * s))]]
        }
        (Case::A, GaugeVariant::SignReversed) => {
            let e = gc.phase(1.0);
            [
                [zero(), e2(1.0), zero()],
                [e.scale(c64(3.0 * k, 0.0)), zero(), e.scale(I * (-s * k))],
            ]
        }
        (Case::A, GaugeVariant::Real) => [
            [zero(), e2(-1.0), zero()],
            [
                ExpPoly::cos(c64(-3.0 * SQRT_2 / 4.0, 0.0), 1.0 / 3.0),
                zero(),
                ExpPoly::sin(c64(-SQRT_2 / 4.0, 0.0), 1.0 / 3.0),
            ],
        ],
        (Case::B, GaugeVariant::Real) => [
            [zero(), e2(-1.0), zero()],
            [
                ExpPoly::cos(c64(k, 0.0), 3.0),
                zero(),
                ExpPoly::sin(c64(3.0 * k, 0.0), 3.0),
            ],
        ],
        (Case::B, GaugeVariant::SignReversed) => unreachable!("rejected by validate"),
    };
    Ok(GaugePotential { w })
}

/// The covariant derivatives `(D₀, D₁)` of a connection.
pub fn covariant_operators(gc: &GaugeCase) -> Result<(Operator, Operator)> {
    let pot = gauge_potential(gc)?;
    Ok((Operator::covariant(0, &pot.w[0]), Operator::covariant(1, &pot.w[1])))
}

/// A spinor doublet `(ψ_p, ψ_n)` as a function of `(r, u)`.
pub trait SpinorField {
    fn eval<S: Scalar>(&self, r: S, u: S) -> [S; 2];
}

/// A spinor with constant components.
#[derive(Clone, Copy, Debug)]
pub struct ConstantSpinor(pub [C64; 2]);

impl SpinorField for ConstantSpinor {
    fn eval<S: Scalar>(&self, _r: S, _u: S) -> [S; 2] {
        [S::constant(self.0[0]), S::constant(self.0[1])]
    }
}

/// `(p₀ e^{αr + βu}, n₀ e^{αr + βu})`.
#[derive(Clone, Copy, Debug)]
pub struct PlaneWaveSpinor {
    pub amp: [C64; 2],
    pub alpha: C64,
    pub beta: C64,
}

impl SpinorField for PlaneWaveSpinor {
    fn eval<S: Scalar>(&self, r: S, u: S) -> [S; 2] {
        let e = (r * self.alpha + u * self.beta).exp();
        [e * self.amp[0], e * self.amp[1]]
    }
}

/// `D_μψ = ∂_μψ + W_{μa}E^aψ` at `(r, u)`.
pub fn covariant_derivative<P: SpinorField + ?Sized>(
    gc: &GaugeCase,
    mu: usize,
    psi: &P,
    r: f64,
    u: f64,
) -> Result<[C64; 2]> {
    if mu > 1 {
        return Err(GeometryError::InvalidParams(format!(
            "direction must be 0 or 1, got {mu}"
        )));
    }
    let pot = gauge_potential(gc)?;
    let (rr, uu) = (c64(r, 0.0), c64(u, 0.0));
    let seeded = if mu == 0 {
        psi.eval(crate::scalar::Dual::new(rr, ONE), crate::scalar::Dual::new(uu, ZERO))
    } else {
        psi.eval(crate::scalar::Dual::new(rr, ZERO), crate::scalar::Dual::new(uu, ONE))
    };
    let value = [seeded[0].re, seeded[1].re];
    let a = pot.matrix(mu, r);
    Ok(std::array::from_fn(|i| {
        seeded[i].eps + a[i][0] * value[0] + a[i][1] * value[1]
    }))
}

/// `F = ∂₀A₁ − ∂₁A₀ + [A₀, A₁]` as a matrix at `r`.
pub fn field_strength(gc: &GaugeCase, r: f64) -> Result<SpinMatrix> {
    let pot = gauge_potential(gc)?;
    let w = pot.at(r);
    let dw1: [C64; 3] = std::array::from_fn(|a| pot.w[1][a].derivative().at(r));
    let (a0, a1) = (from_components(w[0]), from_components(w[1]));
    let d = from_components(dw1);
    let c = commutator(&a0, &a1);
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| d[i][j] + c[i][j])))
}

/// One computed bracket against its closed form.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub name: String,
    pub computed: SpinMatrix,
    pub expected: SpinMatrix,
    /// Largest matrix-entry mismatch, plus any leftover `∂r`/`∂u` part.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct BracketTable {
    pub r: f64,
    pub entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }
}

fn entry(name: &str, op: &Operator, expected: [C64; 3], r: f64) -> BracketEntry {
    let (a, b, m) = op.at(r);
    let expected = from_components(expected);
    BracketEntry {
        name: name.to_string(),
        computed: m,
        residual: mat_max_diff(&m, &expected).max(a.norm()).max(b.norm()),
        expected,
    }
}

/// Closed forms of `(F, [D₀,F], [D₁,F])` in `E`-components.
fn closed_forms(gc: &GaugeCase, r: f64) -> [[C64; 3]; 3] {
    let s = gc.sign.upper();
    let e = gc.phase(1.0).at(r);
    let e2 = e * e;
    let z = ZERO;
    match (gc.case, gc.variant) {
        (Case::A, GaugeVariant::Complex) => {
            let a = c64(2.0 * SQRT_2 / 3.0, 0.0) * e;
            [[z, z, a], [a, z, I * (-s * 2.0 * SQRT_2 / 9.0) * e], [z, -e2, z]]
        }
        (Case::A, GaugeVariant::SignReversed) => {
            let a = c64(2.0 * SQRT_2 / 3.0, 0.0) * e;
            [[z, z, a], [-a, z, I * (-s * 2.0 * SQRT_2 / 9.0) * e], [z, e2, z]]
        }
        (Case::B, GaugeVariant::Complex) => {
            let a = I * (2.0 * SQRT_2) * e;
            [[z, z, a], [a, z, c64(s * 6.0 * SQRT_2, 0.0) * e], [z, -e2, z]]
        }
        (Case::A, GaugeVariant::Real) => {
            let (c, sn) = ((r / 3.0).cos(), (r / 3.0).sin());
            let a = c64(2.0 * SQRT_2 / 3.0 * c, 0.0);
            [
                [z, z, a],
                [a, z, c64(-2.0 * SQRT_2 / 9.0 * sn, 0.0)],
                [z, c64(-c * c, 0.0), z],
            ]
        }
        (Case::B, GaugeVariant::Real) => {
            let (c, sn) = ((3.0 * r).cos(), (3.0 * r).sin());
            let a = c64(2.0 * SQRT_2 * c, 0.0);
            [[z, z, a], [a, z, c64(-6.0 * SQRT_2 * sn, 0.0)], [z, c64(c * c, 0.0), z]]
        }
        (Case::B, GaugeVariant::SignReversed) => unreachable!("rejected by validate"),
    }
}

/// `F = [D₀,D₁]`, `[D₀,F]`, `[D₁,F]` at `r` with their closed forms.
pub fn bracket_table(gc: &GaugeCase, r: f64) -> Result<BracketTable> {
    let (d0, d1) = covariant_operators(gc)?;
    let f = d0.bracket(&d1);
    let want = closed_forms(gc, r);
    let names = match gc.variant {
        GaugeVariant::SignReversed => ["F = [d0,d1]", "[d0,F]", "[d1,F]"],
        _ => ["F = [D0,D1]", "[D0,F]", "[D1,F]"],
    };
    let entries = vec![
        entry(names[0], &f, want[0], r),
        entry(names[1], &d0.bracket(&f), want[1], r),
        entry(names[2], &d1.bracket(&f), want[2], r),
    ];
    Ok(BracketTable { r, entries })
}

/// Brackets of `D̃₀ = (3/(2√2))e^{±ir/3}D₀`, `D̃₁ = D₁` (complex case A):
/// `F̃ = [D̃₀,D̃₁] = E³`, `[D̃₀,F̃]`, `[D̃₁,F̃]`.
pub fn rescaled_brackets(gc: &GaugeCase, r: f64) -> Result<BracketTable> {
    if gc.case != Case::A || gc.variant != GaugeVariant::Complex {
        return Err(GeometryError::UnsupportedCase(format!(
            "rescaled derivatives are only defined for the complex case A, not {}",
            gc.label()
        )));
    }
    let (d0, d1) = covariant_operators(gc)?;
    let rho = gc.phase(-1.0).scale(c64(3.0 / (2.0 * SQRT_2), 0.0));
    let t0 = d0.scaled(&rho);
    let ft = t0.bracket(&d1);
    let k = 3.0 * SQRT_2 / 4.0;
    let (up, down) = (gc.phase(-1.0).at(r), gc.phase(1.0).at(r));
    let z = ZERO;
    let entries = vec![
        entry("F~ = [D~0,D~1]", &ft, [z, z, ONE], r),
        entry("[D~0,F~]", &t0.bracket(&ft), [up * k, z, z], r),
        entry("[D~1,F~]", &d1.bracket(&ft), [z, down * -k, z], r),
    ];
    Ok(BracketTable { r, entries })
}

/// Largest entry of `[[D₀,D₁],F] + [[D₁,F],D₀] + [[F,D₀],D₁]` at `r`.
pub fn jacobi_residual(gc: &GaugeCase, r: f64) -> Result<f64> {
    let (d0, d1) = covariant_operators(gc)?;
    let f = d0.bracket(&d1);
    let j = d0
        .bracket(&d1)
        .bracket(&f)
        .add(&d1.bracket(&f).bracket(&d0))
        .add(&f.bracket(&d0).bracket(&d1));
    Ok(j.max_abs(r))
}

/// `∂μ + W_{μa}(r)E^a` as a vector field on S³×Σ².
pub struct ConnectionField<'a> {
    pub potential: &'a GaugePotential,
    pub mu: usize,
}

impl VectorField for ConnectionField<'_> {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        let mut v = [S::zero(); 5];
        v[if self.mu == 0 { R } else { U }] = S::one();
        for a in 0..3 {
            let w = self.potential.w[self.mu][a].eval(x[R]);
            let e = LeftInvariant(a + 1).coeffs(x);
            for i in 0..5 {
                v[i] += w * e[i];
            }
        }
        v
    }
}

/// `F` from the Lie bracket of the connection vector fields, projected onto
/// `E¹, E², E³` with `σ₁, σ₂, σ₃` and mapped through the Pauli
/// representation. Also returns the size of the leftover `∂r, ∂u` part.
pub fn field_strength_from_vector_fields(gc: &GaugeCase, p: &Point5) -> Result<(SpinMatrix, f64)> {
    let pot = gauge_potential(gc)?;
    let x0 = ConnectionField { potential: &pot, mu: 0 };
    let x1 = ConnectionField { potential: &pot, mu: 1 };
    let v = lie_bracket(&x0, &x1, p)?;
    let sigma = su2_coframe(p);
    let comps: [C64; 3] = std::array::from_fn(|a| (0..5).map(|i| sigma[a][i] * v[i]).sum());
    Ok((from_components(comps), v[R].norm().max(v[U].norm())))
}
