//! Small dense complex linear algebra.
//!
//! Square inverses are done in place by Gauss–Jordan elimination with partial
//! pivoting on the complex modulus. Rank and least squares go through the
//! complex SVD in `nalgebra`.

use nalgebra::DMatrix;

use crate::scalar::C64;

pub type Mat<const N: usize> = [[C64; N]; N];

pub fn zeros<const N: usize>() -> Mat<N> {
    [[C64::new(0.0, 0.0); N]; N]
}

pub fn identity<const N: usize>() -> Mat<N> {
    let mut m = zeros::<N>();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C64::new(1.0, 0.0);
    }
    m
}

/// Inverse and determinant. Returns `None` when a pivot vanishes exactly.
pub fn invert<const N: usize>(m: &Mat<N>) -> Option<(Mat<N>, C64)> {
    let mut a = *m;
    let mut inv = identity::<N>();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return None;
        }
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        let rp = C64::new(1.0, 0.0) / p;
        for k in 0..N {
            a[col][k] *= rp;
            inv[col][k] *= rp;
        }
        for row in 0..N {
            if row == col {
                continue;
            }
            let factor = a[row][col];
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..N {
                let (ak, ik) = (a[col][k], inv[col][k]);
                a[row][k] -= factor * ak;
                inv[row][k] -= factor * ik;
            }
        }
    }
    Some((inv, det))
}

pub fn det<const N: usize>(m: &Mat<N>) -> C64 {
    invert(m).map(|(_, d)| d).unwrap_or(C64::new(0.0, 0.0))
}

pub fn matmul<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut c = zeros::<N>();
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            for j in 0..N {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

pub fn transpose<const N: usize>(a: &Mat<N>) -> Mat<N> {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i]))
}

/// Largest entry modulus of `a - b`.
pub fn max_diff<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> f64 {
    let mut m = 0.0f64;
    for i in 0..N {
        for j in 0..N {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

/// Singular values of a column set (each column a vector), descending.
pub fn singular_values(columns: &[Vec<C64>]) -> Vec<f64> {
    if columns.is_empty() {
        return Vec::new();
    }
    let rows = columns[0].len();
    let m = DMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i]);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Numerical rank: singular values above `rel_tol` times the largest.
pub fn numerical_rank(columns: &[Vec<C64>], rel_tol: f64) -> usize {
    let sv = singular_values(columns);
    match sv.first() {
        Some(&s0) if s0 > 0.0 => sv.iter().filter(|&&s| s > rel_tol * s0).count(),
        _ => 0,
    }
}

/// Minimum-norm least-squares solution of `a x = b` and the max-entry residual.
pub fn least_squares(a: &DMatrix<C64>, b: &[C64]) -> (Vec<C64>, f64) {
    let rhs = nalgebra::DVector::from_column_slice(b);
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let eps = smax * 1e-12;
    let x = svd.solve(&rhs, eps).expect("SVD computed with both U and V^H");
    let r = a * &x - &rhs;
    let residual = r.iter().map(|z| z.norm()).fold(0.0, f64::max);
    (x.iter().copied().collect(), residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c64;

    #[test]
    fn inverse_of_complex_matrix() {
        let m: Mat<3> = [
            [c64(0.0, 1.0), c64(2.0, 0.0), c64(0.5, -1.0)],
            [c64(1.0, 0.0), c64(0.0, 0.0), c64(3.0, 0.0)],
            [c64(-1.0, 2.0), c64(1.0, 1.0), c64(0.0, 0.0)],
        ];
        let (inv, d) = invert(&m).unwrap();
        assert!(max_diff(&matmul(&m, &inv), &identity()) < 1e-14);
        // cofactor expansion along the second row
        let minor = |r: [usize; 2], c: [usize; 2]| m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
        let cof = -m[1][0] * minor([0, 2], [1, 2]) - m[1][2] * minor([0, 2], [0, 1]);
        assert!((d - cof).norm() < 1e-13);
    }

    #[test]
    fn singular_matrix_reports_none_or_zero_det() {
        let m: Mat<2> = [[c64(1.0, 0.0), c64(2.0, 0.0)], [c64(2.0, 0.0), c64(4.0, 0.0)]];
        assert!(det(&m).norm() < 1e-15);
    }

    #[test]
    fn rank_of_dependent_columns() {
        let a = vec![c64(1.0, 0.0), c64(0.0, 1.0), c64(2.0, 0.0)];
        let b: Vec<C64> = a.iter().map(|z| z * c64(0.0, 3.0)).collect();
        let c = vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)];
        assert_eq!(numerical_rank(&[a.clone(), b], 1e-10), 1);
        assert_eq!(numerical_rank(&[a, c], 1e-10), 2);
    }

    #[test]
    fn least_squares_recovers_consistent_solution() {
        let a = DMatrix::from_row_slice(
            3,
            2,
            &[
                c64(1.0, 0.0),
                c64(0.0, 1.0),
                c64(2.0, 0.0),
                c64(1.0, 0.0),
                c64(0.0, 0.0),
                c64(1.0, -1.0),
            ],
        );
        let x = [c64(0.3, 0.1), c64(-1.0, 2.0)];
        let b: Vec<C64> = (0..3).map(|i| a[(i, 0)] * x[0] + a[(i, 1)] * x[1]).collect();
        let (sol, res) = least_squares(&a, &b);
        assert!(res < 1e-13);
        assert!((sol[0] - x[0]).norm() < 1e-12 && (sol[1] - x[1]).norm() < 1e-12);
    }
}
