//! Pointwise exterior algebra on the five coordinate directions and the
//! exterior derivative of form fields.
//!
//! Two-forms are stored on the ten pairs `a < b`, three-forms on the ten
//! triples `a < b < c`, so antisymmetry is structural. Derivatives of
//! coefficients come from dual numbers (see [`crate::scalar`]).

use crate::error::{GeometryError, Result};
use crate::linalg::{invert, Mat};
use crate::manifold::{CoframeField, Point5};
use crate::scalar::{seed_axis, Scalar, C64};

/// Index pairs `(a, b)` with `a < b`, in storage order.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Index triples `(a, b, c)` with `a < b < c`, in storage order.
pub const TRIPLES: [(usize, usize, usize); 10] = [
    (0, 1, 2),
    (0, 1, 3),
    (0, 1, 4),
    (0, 2, 3),
    (0, 2, 4),
    (0, 3, 4),
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 4),
    (2, 3, 4),
];

/// Storage slot of the pair `(a, b)`, `a < b`.
pub const fn pair_index(a: usize, b: usize) -> usize {
    // rows of the strictly upper triangle of a 5×5 matrix
    match a {
        0 => b - 1,
        1 => 3 + b - 1,
        2 => 6 + b - 2,
        _ => 9,
    }
}

/// Coefficients `c[a][b]`, `a < b`, of a two-form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoForm<S> {
    pub c: [S; 10],
}

pub type TwoFormCoeffs = TwoForm<C64>;

impl<S: Scalar> TwoForm<S> {
    pub fn zero() -> Self {
        Self { c: [S::zero(); 10] }
    }

    /// Antisymmetric accessor; `get(a, a)` is zero.
    pub fn get(&self, a: usize, b: usize) -> S {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Less => self.c[pair_index(a, b)],
            Greater => -self.c[pair_index(b, a)],
            Equal => S::zero(),
        }
    }

    /// Adds `v` to the `(a, b)` component, respecting antisymmetry.
    pub fn add(&mut self, a: usize, b: usize, v: S) {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Less => self.c[pair_index(a, b)] += v,
            Greater => self.c[pair_index(b, a)] -= v,
            Equal => {}
        }
    }

    pub fn scaled(&self, k: S) -> Self {
        Self {
            c: self.c.map(|v| v * k),
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i] + o.c[i]),
        }
    }

    pub fn minus(&self, o: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i] - o.c[i]),
        }
    }
}

impl TwoForm<C64> {
    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Coefficients of a three-form on the triples `a < b < c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThreeForm {
    pub c: [C64; 10],
}

impl ThreeForm {
    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// A one-form field, coefficients in `(dψ, dθ, dφ, dr, du)`.
pub trait OneFormField {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5];
}

/// A two-form field.
pub trait TwoFormField {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> TwoForm<S>;
}

/// `α ∧ β` with `c[a][b] = α_a β_b − α_b β_a`.
pub fn wedge<S: Scalar>(alpha: &[S; 5], beta: &[S; 5]) -> TwoForm<S> {
    TwoForm {
        c: PAIRS.map(|(a, b)| alpha[a] * beta[b] - alpha[b] * beta[a]),
    }
}

/// Jacobian `∂_a α_b` of a one-form given as a closure over dual points.
fn jacobian<S: Scalar, F>(x: &[S; 5], eval: F) -> [[S; 5]; 5]
where
    F: Fn(&[crate::scalar::Dual<S>; 5]) -> [crate::scalar::Dual<S>; 5],
{
    std::array::from_fn(|a| eval(&seed_axis(x, a)).map(|d| d.eps))
}

fn antisymmetrize<S: Scalar>(jac: &[[S; 5]; 5]) -> TwoForm<S> {
    TwoForm {
        c: PAIRS.map(|(a, b)| jac[a][b] - jac[b][a]),
    }
}

/// `dα` at a generic (possibly dual) point.
pub fn d_one_form<S: Scalar, A: OneFormField + ?Sized>(alpha: &A, x: &[S; 5]) -> TwoForm<S> {
    antisymmetrize(&jacobian(x, |xd| alpha.coeffs(xd)))
}

/// `dα(p)` with `(dα)_{ab} = ∂_a α_b − ∂_b α_a`.
pub fn exterior_derivative<A: OneFormField + ?Sized>(alpha: &A, p: &Point5) -> TwoFormCoeffs {
    d_one_form(alpha, &p.coords())
}

/// Exterior derivatives of all five rows of a coframe field.
pub fn d_coframe<S: Scalar, C: CoframeField + ?Sized>(frame: &C, x: &[S; 5]) -> [TwoForm<S>; 5] {
    let jac: [[[S; 5]; 5]; 5] = std::array::from_fn(|a| frame.rows(&seed_axis(x, a)).map(|row| row.map(|d| d.eps)));
    // jac[a][i][b] = ∂_a (row i)_b
    std::array::from_fn(|i| TwoForm {
        c: PAIRS.map(|(a, b)| jac[a][i][b] - jac[b][i][a]),
    })
}

/// The field `dα`.
pub struct ExteriorDerivative<'a, A: ?Sized>(pub &'a A);

impl<A: OneFormField + ?Sized> TwoFormField for ExteriorDerivative<'_, A> {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> TwoForm<S> {
        d_one_form(self.0, x)
    }
}

/// `σ₁, σ₂, σ₃` (index 0, 1, 2) as one-form fields.
#[derive(Clone, Copy, Debug)]
pub struct Su2Form(pub usize);

impl OneFormField for Su2Form {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        crate::manifold::su2_rows(x)[self.0]
    }
}

/// `dσ₁ − σ₂∧σ₃`, `dσ₂ − σ₃∧σ₁`, `dσ₃ − σ₁∧σ₂`: largest coefficient at `p`.
pub fn maurer_cartan_residual(p: &Point5) -> f64 {
    let s = crate::manifold::su2_coframe(p);
    (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            exterior_derivative(&Su2Form(i), p)
                .minus(&wedge(&s[j], &s[k]))
                .max_abs()
        })
        .fold(0.0, f64::max)
}

/// A single row of a coframe field, viewed as a one-form field.
pub struct Row<'a, C: ?Sized> {
    pub frame: &'a C,
    pub index: usize,
}

impl<C: CoframeField + ?Sized> OneFormField for Row<'_, C> {
    fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
        self.frame.rows(x)[self.index]
    }
}

/// `dβ(p)` for a two-form field:
/// `(dβ)_{abc} = ∂_a β_{bc} − ∂_b β_{ac} + ∂_c β_{ab}`.
pub fn d_two_form<B: TwoFormField + ?Sized>(beta: &B, p: &Point5) -> ThreeForm {
    let x = p.coords();
    let grad: [TwoForm<C64>; 5] = std::array::from_fn(|a| {
        let t = beta.coeffs(&seed_axis(&x, a));
        TwoForm { c: t.c.map(|d| d.eps) }
    });
    ThreeForm {
        c: TRIPLES.map(|(a, b, c)| grad[a].get(b, c) - grad[b].get(a, c) + grad[c].get(a, b)),
    }
}

/// Coefficients `c_{ab}` with `ω = Σ_{a<b} c_{ab} e_a ∧ e_b` for a coframe
/// `e` given by its rows at a point.
pub fn decompose_two_form(frame: &Mat<5>, omega: &TwoFormCoeffs) -> Result<TwoFormCoeffs> {
    let (dual, det) = invert(frame).ok_or(GeometryError::SingularCoframe { det: 0.0 })?;
    if det.norm() < 1e-12 {
        return Err(GeometryError::SingularCoframe { det: det.norm() });
    }
    // column a of `dual` is the frame vector V_a with e_b(V_a) = δ_ab
    Ok(TwoForm {
        c: PAIRS.map(|(a, b)| {
            let mut s = C64::new(0.0, 0.0);
            for m in 0..5 {
                for n in 0..5 {
                    s += omega.get(m, n) * dual[m][a] * dual[n][b];
                }
            }
            s
        }),
    })
}

/// `Σ_{a<b} c_{ab} e_a ∧ e_b` in coordinates.
pub fn reconstruct_two_form(frame: &Mat<5>, coeffs: &TwoFormCoeffs) -> TwoFormCoeffs {
    let mut out = TwoForm::zero();
    for (k, &(a, b)) in PAIRS.iter().enumerate() {
        out = out.plus(&wedge(&frame[a], &frame[b]).scaled(coeffs.c[k]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{su2_rows, Sampler, R, U};
    use crate::scalar::c64;

    /// `e^{-r} du`
    struct DecayDu;
    impl OneFormField for DecayDu {
        fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> [S; 5] {
            let mut c = [S::zero(); 5];
            c[U] = (-x[R]).exp();
            c
        }
    }

    struct ConstDr;
    impl OneFormField for ConstDr {
        fn coeffs<S: Scalar>(&self, _x: &[S; 5]) -> [S; 5] {
            let mut c = [S::zero(); 5];
            c[R] = S::one();
            c
        }
    }

    /// `e^{-r} dr ∧ du` as a field
    struct DecayDrDu;
    impl TwoFormField for DecayDrDu {
        fn coeffs<S: Scalar>(&self, x: &[S; 5]) -> TwoForm<S> {
            let mut t = TwoForm::zero();
            t.add(R, U, (-x[R]).exp());
            t
        }
    }

    #[test]
    fn pair_index_matches_table() {
        for (k, &(a, b)) in PAIRS.iter().enumerate() {
            assert_eq!(pair_index(a, b), k);
        }
    }

    #[test]
    fn wedge_basics() {
        let dr = [0.0, 0.0, 0.0, 1.0, 0.0].map(|v| c64(v, 0.0));
        assert_eq!(wedge(&dr, &dr).max_abs(), 0.0);

        let p = Point5::new(0.0, std::f64::consts::FRAC_PI_2, 0.0, 0.0, 0.0);
        let s = su2_rows(&p.coords());
        let w = wedge(&s[1], &s[2]);
        assert!((w.get(0, 1) - c64(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn exterior_derivative_examples() {
        let p = Point5::new(0.4, 1.2, 0.3, 0.25, -0.1);
        assert_eq!(exterior_derivative(&ConstDr, &p).max_abs(), 0.0);

        let d = exterior_derivative(&DecayDu, &p);
        let expected = -(-0.25f64).exp();
        assert!((d.get(R, U) - c64(expected, 0.0)).norm() < 1e-15);

        let s = su2_rows(&p.coords());
        let res = exterior_derivative(&Su2Form(2), &p)
            .minus(&wedge(&s[0], &s[1]))
            .max_abs();
        assert!(res < 1e-12);
    }

    #[test]
    fn d_squared_vanishes() {
        let mut sampler = Sampler::new(3);
        for p in sampler.points(20) {
            for k in 0..3 {
                let sigma = Su2Form(k);
                assert!(d_two_form(&ExteriorDerivative(&sigma), &p).max_abs() < 1e-12);
            }
            assert!(d_two_form(&ExteriorDerivative(&DecayDu), &p).max_abs() < 1e-12);
            assert_eq!(d_two_form(&DecayDrDu, &p).max_abs(), 0.0);
        }
    }

    #[test]
    fn decomposition_of_basis_element() {
        let p = Point5::new(0.4, 1.2, 0.3, 0.25, -0.1);
        let s = su2_rows(&p.coords());
        let frame: Mat<5> = [
            s[0],
            s[1],
            s[2],
            [0.0, 0.0, 0.0, 1.0, 0.0].map(|v| c64(v, 0.0)),
            [0.0, 0.0, 0.0, 0.3, 2.0].map(|v| c64(v, 0.0)),
        ];
        let c = decompose_two_form(&frame, &wedge(&frame[1], &frame[2])).unwrap();
        for (k, &(a, b)) in PAIRS.iter().enumerate() {
            let expected = if (a, b) == (1, 2) { 1.0 } else { 0.0 };
            assert!((c.c[k] - c64(expected, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn singular_frame_rejected() {
        let mut frame: Mat<5> = crate::linalg::identity();
        frame[4] = frame[3];
        let err = decompose_two_form(&frame, &TwoForm::zero()).unwrap_err();
        assert!(matches!(err, GeometryError::SingularCoframe { .. }));
    }
}
