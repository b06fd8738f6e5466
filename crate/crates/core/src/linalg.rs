//! Fixed-size 3×3 dense algebra for the force-balance solve.

use crate::real::Real;

pub type Mat3<T> = [[T; 3]; 3];

/// LU factorization with partial pivoting, `P·A = L·U`.
#[derive(Debug, Clone, Copy)]
pub struct Lu3<T> {
    lu: Mat3<T>,
    perm: [usize; 3],
}

impl<T: Real> Lu3<T> {
    /// Returns `None` when a pivot is exactly zero or non-finite.
    pub fn factor(a: &Mat3<T>) -> Option<Self> {
        let mut lu = *a;
        let mut perm = [0, 1, 2];
        for col in 0..3 {
            let pivot_row = (col..3)
                .max_by(|&i, &j| {
                    lu[i][col]
                        .abs()
                        .partial_cmp(&lu[j][col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .unwrap_or(col);
            let pivot = lu[pivot_row][col];
            if pivot == T::zero() || !pivot.is_finite() {
                return None;
            }
            lu.swap(col, pivot_row);
            perm.swap(col, pivot_row);
            for row in col + 1..3 {
                let f = lu[row][col] / pivot;
                lu[row][col] = f;
                for c in col + 1..3 {
                    lu[row][c] = lu[row][c] - f * lu[col][c];
                }
            }
        }
        Some(Self { lu, perm })
    }

    pub fn solve(&self, b: [T; 3]) -> [T; 3] {
        let mut y = [b[self.perm[0]], b[self.perm[1]], b[self.perm[2]]];
        for i in 0..3 {
            for j in 0..i {
                y[i] = y[i] - self.lu[i][j] * y[j];
            }
        }
        for i in (0..3).rev() {
            for j in i + 1..3 {
                y[i] = y[i] - self.lu[i][j] * y[j];
            }
            y[i] = y[i] / self.lu[i][i];
        }
        y
    }

    pub fn inverse(&self) -> Mat3<T> {
        let mut inv = [[T::zero(); 3]; 3];
        for c in 0..3 {
            let mut e = [T::zero(); 3];
            e[c] = T::one();
            let x = self.solve(e);
            for r in 0..3 {
                inv[r][c] = x[r];
            }
        }
        inv
    }
}

/// Induced 1-norm (max column sum).
pub fn norm1<T: Real>(a: &Mat3<T>) -> T {
    (0..3)
        .map(|c| a[0][c].abs() + a[1][c].abs() + a[2][c].abs())
        .fold(T::zero(), T::max)
}

/// 1-norm condition number; infinite when the matrix cannot be factored.
pub fn condition_number<T: Real>(a: &Mat3<T>) -> T {
    match Lu3::factor(a) {
        Some(lu) => norm1(a) * norm1(&lu.inverse()),
        None => T::infinity(),
    }
}

pub fn mat_vec<T: Real>(a: &Mat3<T>, v: [T; 3]) -> [T; 3] {
    let mut out = [T::zero(); 3];
    for (o, row) in out.iter_mut().zip(a) {
        *o = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_needs_pivoting() {
        let a = [[0.0_f64, 2.0, 1.0], [1.0, 1.0, 0.0], [3.0, 0.0, 1.0]];
        let lu = Lu3::factor(&a).unwrap();
        let x = lu.solve([5.0, 3.0, 6.0]);
        let back = mat_vec(&a, x);
        for (b, e) in back.iter().zip([5.0, 3.0, 6.0]) {
            assert!((b - e).abs() < 1e-14);
        }
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let a = [[1.0_f64, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]];
        assert!(condition_number(&a) > 1e15);
        let zero = [[0.0_f64; 3]; 3];
        assert!(Lu3::factor(&zero).is_none());
        assert_eq!(condition_number(&zero), f64::INFINITY);
    }

    #[test]
    fn condition_of_diagonal() {
        let a = [[3.0_f64, 0.0, 0.0], [0.0, 6.0, 0.0], [0.0, 0.0, 18.0]];
        assert!((condition_number(&a) - 6.0).abs() < 1e-14);
    }
}
