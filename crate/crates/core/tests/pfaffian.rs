use proptest::prelude::*;
use su2_pfaffian::manifold::Sampler;
use su2_pfaffian::pfaffian::{
    check_structure_equations, check_structure_equations_at, coordinate_pair, growth_vector, growth_vector_of,
    SystemParams, RANK_TOL, STRUCTURE_TOL,
};
use su2_pfaffian::profile::Profile;
use su2_pfaffian::scalar::{c64, C64, I};
use su2_pfaffian::{GeometryError, Point5};

const ONE: C64 = c64(1.0, 0.0);
const ZERO: C64 = c64(0.0, 0.0);

fn points(seed: u64, n: usize) -> Vec<Point5> {
    Sampler::new(seed).points(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn real_systems_are_bracket_generating(a2 in 0.2..3.0f64, c2 in -3.0..3.0f64, seed in any::<u64>()) {
        let params = SystemParams::real(a2, c2).unwrap();
        let report = check_structure_equations_at(&params, &points(seed, 3), STRUCTURE_TOL);
        prop_assert!(report.pass, "{:?}", report.residuals);
        let h = (a2 * a2 + c2 * c2) / (a2 * a2);
        prop_assert!((report.h - c64(h, 0.0)).norm() < 1e-9 * h);
    }

    #[test]
    fn complex_systems_are_bracket_generating(a2 in 0.2..3.0f64, c2re in -2.0..2.0f64, c2im in -2.0..2.0f64, seed in any::<u64>()) {
        let c2 = c64(c2re, c2im);
        prop_assume!((c64(a2 * a2, 0.0) + c2 * c2).norm() > 1e-2);
        let params = SystemParams::simplified(c64(a2, 0.0), c2, ONE).unwrap();
        let report = check_structure_equations_at(&params, &points(seed, 2), STRUCTURE_TOL);
        prop_assert!(report.pass, "{:?}", report.residuals);
        let h = (c64(a2 * a2, 0.0) + c2 * c2) / (a2 * a2);
        prop_assert!((report.h - h).norm() < 1e-9 * (1.0 + h.norm()));
    }

    #[test]
    fn default_profile_solves_the_ode(a2 in 0.2..3.0f64, c2 in -3.0..3.0f64, r in -1.0..1.0f64) {
        let params = SystemParams::real(a2, c2).unwrap();
        prop_assert!(params.ode_residual(r).norm() < 1e-12);
    }

    #[test]
    fn growth_vector_is_2_3_5(a2 in 0.2..3.0f64, c2 in -3.0..3.0f64, seed in any::<u64>()) {
        let params = SystemParams::real(a2, c2).unwrap();
        for p in points(seed, 2) {
            prop_assert_eq!(growth_vector(&params, &p, RANK_TOL).unwrap(), (2, 3, 5));
        }
    }

    #[test]
    fn non_simplified_coefficients_break_bracket_generation(k in 0.2..1.0f64, which in 0usize..3) {
        let mut v = [ZERO; 3];
        v[which] = c64(k, 0.0);
        let params = SystemParams::new(v[0], ONE, v[1], ONE, v[2], ONE, ONE).unwrap();
        prop_assert!(!check_structure_equations(&params, 3, STRUCTURE_TOL).pass);
    }
}

#[test]
fn reference_system_reports_h_two() {
    let report = check_structure_equations(&SystemParams::real(1.0, 1.0).unwrap(), 10, STRUCTURE_TOL);
    assert!(report.pass);
    assert!((report.h - c64(2.0, 0.0)).norm() < 1e-12);
    assert!(report.min_leading > 1e-3);
}

#[test]
fn wrong_profile_fails() {
    let f = Profile::exp(ONE, ONE);
    let params = SystemParams::with_profile(ZERO, ONE, ZERO, ONE, ZERO, ONE, ONE, f).unwrap();
    assert!(params.ode_residual(0.3).norm() > 1e-3);
    assert!(!check_structure_equations(&params, 5, STRUCTURE_TOL).pass);
}

#[test]
fn complex_locus_keeps_growth_vector() {
    let params = SystemParams::simplified(ONE, I / 3.0, ONE).unwrap();
    for p in points(7, 10) {
        assert_eq!(growth_vector(&params, &p, RANK_TOL).unwrap(), (2, 3, 5));
    }
}

#[test]
fn integrable_pair_is_not_bracket_generating() {
    let (x, y) = coordinate_pair();
    let p = Point5::new(0.1, 1.0, 0.2, 0.0, 0.0);
    assert_eq!(growth_vector_of(&x, &y, &p, RANK_TOL).unwrap(), (2, 2, 2));
}

#[test]
fn degenerate_parameters_are_rejected() {
    assert!(matches!(
        SystemParams::real(0.0, 1.0),
        Err(GeometryError::InvalidParams(_))
    ));
    assert!(matches!(
        SystemParams::simplified(ONE, ZERO, ZERO),
        Err(GeometryError::InvalidParams(_))
    ));
    // a₂² + c₂² = 0 with b₂ = 0
    assert!(SystemParams::simplified(ONE, I, ONE).is_err());
}
