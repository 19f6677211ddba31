use nalgebra::DMatrix;
use proptest::prelude::*;
use su2_pfaffian::linalg::{det, identity, invert, least_squares, matmul, max_diff, numerical_rank, Mat};
use su2_pfaffian::scalar::{c64, C64};

fn mat() -> impl Strategy<Value = Mat<5>> {
    prop::array::uniform5(prop::array::uniform5((-1.0..1.0f64, -1.0..1.0f64))).prop_map(|m| {
        let mut a = m.map(|row| row.map(|(re, im)| c64(re, im)));
        for (i, row) in a.iter_mut().enumerate() {
            row[i] += c64(4.0, 0.0);
        }
        a
    })
}

proptest! {
    #[test]
    fn inverse_is_two_sided(a in mat()) {
        let (inv, d) = invert(&a).unwrap();
        prop_assert!(max_diff(&matmul(&a, &inv), &identity()) < 1e-12);
        prop_assert!(max_diff(&matmul(&inv, &a), &identity()) < 1e-12);
        prop_assert!((d - det(&a)).norm() < 1e-9 * d.norm());
    }

    #[test]
    fn determinant_is_multiplicative(a in mat(), b in mat()) {
        let lhs = det(&matmul(&a, &b));
        let rhs = det(&a) * det(&b);
        prop_assert!((lhs - rhs).norm() < 1e-9 * rhs.norm());
    }

    #[test]
    fn consistent_systems_solve_exactly(a in mat(), x in prop::array::uniform5((-1.0..1.0f64, -1.0..1.0f64))) {
        let x: Vec<C64> = x.iter().map(|&(re, im)| c64(re, im)).collect();
        let m = DMatrix::from_fn(5, 5, |i, j| a[i][j]);
        let b: Vec<C64> = (0..5).map(|i| (0..5).map(|j| a[i][j] * x[j]).sum()).collect();
        let (sol, res) = least_squares(&m, &b);
        prop_assert!(res < 1e-12);
        for (s, t) in sol.iter().zip(&x) {
            prop_assert!((s - t).norm() < 1e-10);
        }
    }
}

#[test]
fn singular_matrix_has_no_inverse() {
    let mut a: Mat<2> = [[c64(1.0, 0.0), c64(2.0, 0.0)], [c64(2.0, 0.0), c64(4.0, 0.0)]];
    assert!(invert(&a).is_none());
    a[1][1] = c64(4.5, 0.0);
    assert!(invert(&a).is_some());
}

#[test]
fn rank_of_dependent_columns() {
    let u = vec![c64(1.0, 0.0), c64(0.0, 1.0), c64(2.0, 0.0)];
    let v = vec![c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, 2.0)];
    let w = vec![c64(1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)];
    assert_eq!(numerical_rank(&[u.clone(), v.clone()], 1e-10), 1);
    assert_eq!(numerical_rank(&[u, v, w], 1e-10), 2);
}

#[test]
fn overdetermined_inconsistent_system_reports_residual() {
    let m = DMatrix::from_row_slice(3, 1, &[c64(1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)]);
    let (x, res) = least_squares(&m, &[c64(0.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)]);
    assert!((x[0] - c64(1.0, 0.0)).norm() < 1e-12);
    assert!((res - 1.0).abs() < 1e-12);
}
