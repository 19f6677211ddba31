use proptest::prelude::*;
use su2_pfaffian::gauge::{
    bracket_table, commutator, components, covariant_derivative, field_strength, field_strength_from_vector_fields,
    from_components, gauge_potential, jacobi_residual, mat_max_diff, mat_mul, rescaled_brackets, ConstantSpinor,
    ExpPoly, GaugeCase, GaugeVariant, PlaneWaveSpinor, SpinMatrix,
};
use su2_pfaffian::nurowski::{Case, Sign};
use su2_pfaffian::scalar::{c64, C64};
use su2_pfaffian::{GeometryError, Point5};

fn cplx() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| c64(re, im))
}

fn spin() -> impl Strategy<Value = SpinMatrix> {
    prop::array::uniform2(prop::array::uniform2(cplx()))
}

fn exp_poly() -> impl Strategy<Value = ExpPoly> {
    prop::collection::vec((cplx(), cplx()), 1..4).prop_map(|t| {
        t.into_iter()
            .fold(ExpPoly::zero(), |acc, (a, rate)| acc.add(&ExpPoly::exp(a, rate * 0.5)))
    })
}

fn apply(m: &SpinMatrix, v: &[C64; 2]) -> [C64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

proptest! {
    #[test]
    fn commutator_satisfies_jacobi(a in spin(), b in spin(), c in spin()) {
        let sum = |x: SpinMatrix, y: SpinMatrix, z: SpinMatrix| -> SpinMatrix {
            std::array::from_fn(|i| std::array::from_fn(|j| x[i][j] + y[i][j] + z[i][j]))
        };
        let j = sum(
            commutator(&a, &commutator(&b, &c)),
            commutator(&b, &commutator(&c, &a)),
            commutator(&c, &commutator(&a, &b)),
        );
        prop_assert!(mat_max_diff(&j, &[[c64(0.0, 0.0); 2]; 2]) < 1e-10);
        let ab = commutator(&a, &b);
        let ba = commutator(&b, &a);
        prop_assert!(mat_max_diff(&ab, &ba.map(|r| r.map(|z| -z))) < 1e-12);
    }

    #[test]
    fn components_round_trip(w in prop::array::uniform3(cplx())) {
        let back = components(&from_components(w));
        for a in 0..3 {
            prop_assert!((back[a] - w[a]).norm() < 1e-12);
        }
    }

    #[test]
    fn exp_poly_arithmetic_matches_pointwise(p in exp_poly(), q in exp_poly(), r in -1.0..1.0f64) {
        prop_assert!((p.mul(&q).at(r) - p.at(r) * q.at(r)).norm() < 1e-9 * (1.0 + (p.at(r) * q.at(r)).norm()));
        prop_assert!((p.sub(&q).at(r) - (p.at(r) - q.at(r))).norm() < 1e-10 * (1.0 + p.at(r).norm() + q.at(r).norm()));
    }

    #[test]
    fn exp_poly_derivative_matches_finite_difference(p in exp_poly(), r in -1.0..1.0f64) {
        let h = 1e-5;
        let fd = (p.at(r + h) - p.at(r - h)) / (2.0 * h);
        let d = p.derivative().at(r);
        prop_assert!((d - fd).norm() < 1e-6 * (1.0 + d.norm()));
    }

    #[test]
    fn bracket_tables_hold(r in -2.0..2.0f64) {
        for gc in GaugeCase::all() {
            let t = bracket_table(&gc, r).unwrap();
            prop_assert!(t.max_residual() < 1e-10, "{}: {:?}", gc.label(), t.entries);
            prop_assert!(jacobi_residual(&gc, r).unwrap() < 1e-10);
        }
        for sign in [Sign::Minus, Sign::Plus] {
            let gc = GaugeCase::new(Case::A, sign, GaugeVariant::Complex);
            prop_assert!(rescaled_brackets(&gc, r).unwrap().max_residual() < 1e-10);
        }
    }

    #[test]
    fn field_strength_from_brackets_of_vector_fields(
        psi in -3.0..3.0f64, theta in 0.3..2.8f64, phi in -3.0..3.0f64, r in -0.5..0.5f64, u in -1.0..1.0f64,
    ) {
        let p = Point5::new(psi, theta, phi, r, u);
        for gc in GaugeCase::all() {
            let (f, leftover) = field_strength_from_vector_fields(&gc, &p).unwrap();
            prop_assert!(mat_max_diff(&f, &field_strength(&gc, r).unwrap()) < 1e-10);
            prop_assert!(leftover < 1e-12);
        }
    }

    #[test]
    fn covariant_derivative_of_plane_wave(amp in prop::array::uniform2(cplx()), alpha in cplx(), beta in cplx(), r in -1.0..1.0f64, u in -1.0..1.0f64) {
        let wave = PlaneWaveSpinor { amp, alpha: alpha * 0.3, beta: beta * 0.3 };
        let e = (alpha * 0.3 * r + beta * 0.3 * u).exp();
        let value = [amp[0] * e, amp[1] * e];
        for gc in GaugeCase::all() {
            let pot = gauge_potential(&gc).unwrap();
            for (mu, k) in [(0, alpha * 0.3), (1, beta * 0.3)] {
                let got = covariant_derivative(&gc, mu, &wave, r, u).unwrap();
                let a = apply(&pot.matrix(mu, r), &value);
                for i in 0..2 {
                    prop_assert!((got[i] - (value[i] * k + a[i])).norm() < 1e-10 * (1.0 + value[i].norm()));
                }
            }
        }
    }
}

#[test]
fn constant_spinor_sees_only_the_potential() {
    let gc = GaugeCase::new(Case::B, Sign::Plus, GaugeVariant::Complex);
    let psi = [c64(1.0, 0.0), c64(0.0, 1.0)];
    let pot = gauge_potential(&gc).unwrap();
    for mu in 0..2 {
        let got = covariant_derivative(&gc, mu, &ConstantSpinor(psi), 0.4, 0.0).unwrap();
        let want = apply(&pot.matrix(mu, 0.4), &psi);
        assert!((got[0] - want[0]).norm() < 1e-14 && (got[1] - want[1]).norm() < 1e-14);
    }
    assert!(covariant_derivative(&gc, 2, &ConstantSpinor(psi), 0.0, 0.0).is_err());
}

#[test]
fn field_strength_is_traceless() {
    for gc in GaugeCase::all() {
        let f = field_strength(&gc, 0.7).unwrap();
        assert!((f[0][0] + f[1][1]).norm() < 1e-14, "{}", gc.label());
        assert!(mat_mul(&f, &f)[0][1].norm() < 1e-12);
    }
}

#[test]
fn sign_reversed_case_b_is_unsupported() {
    let gc = GaugeCase::new(Case::B, Sign::Minus, GaugeVariant::SignReversed);
    assert!(matches!(gauge_potential(&gc), Err(GeometryError::UnsupportedCase(_))));
    assert!(matches!(
        bracket_table(&gc, 0.0),
        Err(GeometryError::UnsupportedCase(_))
    ));
}

#[test]
fn variants_parse() {
    for v in [GaugeVariant::Complex, GaugeVariant::Real, GaugeVariant::SignReversed] {
        assert_eq!(v.to_string().parse::<GaugeVariant>().unwrap(), v);
    }
    assert!("imaginary".parse::<GaugeVariant>().is_err());
}
