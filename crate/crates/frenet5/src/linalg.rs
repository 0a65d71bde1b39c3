//! Small dense linear algebra: vectors in R^5, the quadruple vector product,
//! 4x4 solves with partial pivoting, and Gram–Schmidt orthonormalization.

use crate::error::{Error, Result};
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// A vector in R^5.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec5(pub [f64; 5]);

impl Vec5 {
    pub const ZERO: Vec5 = Vec5([0.0; 5]);

    /// Standard basis vector `e_k` (0-based).
    pub fn basis(k: usize) -> Vec5 {
        let mut v = [0.0; 5];
        v[k] = 1.0;
        Vec5(v)
    }

    pub fn dot(&self, other: &Vec5) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// `self / ‖self‖`. The caller is responsible for checking the norm
    /// against a tolerance first; dividing by a tiny norm is permitted.
    pub fn normalized(&self) -> Vec5 {
        *self * (1.0 / self.norm())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }
}

impl Index<usize> for Vec5 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vec5 {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl Add for Vec5 {
    type Output = Vec5;
    fn add(self, rhs: Vec5) -> Vec5 {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        Vec5(v)
    }
}

impl Sub for Vec5 {
    type Output = Vec5;
    fn sub(self, rhs: Vec5) -> Vec5 {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        Vec5(v)
    }
}

impl Neg for Vec5 {
    type Output = Vec5;
    fn neg(self) -> Vec5 {
        Vec5(self.0.map(|a| -a))
    }
}

impl Mul<f64> for Vec5 {
    type Output = Vec5;
    fn mul(self, s: f64) -> Vec5 {
        Vec5(self.0.map(|a| a * s))
    }
}

/// A 4x4 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub fn identity() -> Mat4 {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Mat4(m)
    }

    pub fn mul_vec(&self, x: &[f64; 4]) -> [f64; 4] {
        let mut y = [0.0; 4];
        for (yi, row) in y.iter_mut().zip(&self.0) {
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }
}

fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
}

#[allow(clippy::needless_range_loop)] // column skip is clearest with indices
fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut acc = 0.0;
    let mut sign = 1.0;
    for col in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c != col {
                    minor[r - 1][cc] = m[r][c];
                    cc += 1;
                }
            }
        }
        acc += sign * m[0][col] * det3(&minor);
        sign = -sign;
    }
    acc
}

/// The quadruple vector product `x (x) y (x) z (x) w` in R^5: the formal
/// determinant with the basis row `e1..e5` first and the rows `x, y, z, w`
/// below it in argument order, expanded along the first row. The result is
/// orthogonal to all four inputs; the map is multilinear and alternating.
pub fn quad_product(x: &Vec5, y: &Vec5, z: &Vec5, w: &Vec5) -> Vec5 {
    let rows = [x, y, z, w];
    let mut out = [0.0; 5];
    let mut sign = 1.0;
    for (col, slot) in out.iter_mut().enumerate() {
        // Minor of the basis entry in column `col`: the 4x4 matrix of the
        // argument rows with that column deleted.
        let mut minor = [[0.0; 4]; 4];
        for (r, row) in rows.iter().enumerate() {
            let mut cc = 0;
            for c in 0..5 {
                if c != col {
                    minor[r][cc] = row[c];
                    cc += 1;
                }
            }
        }
        *slot = sign * det4(&minor);
        sign = -sign;
    }
    Vec5(out)
}

/// Solve `A x = b` by Gaussian elimination with partial pivoting.
///
/// Fails with `SingularSystem` when a pivot's magnitude falls below
/// `1e-12 * max |A_ij|` (taken over the initial entries).
// Rows `r` and `col` of the same matrix alias, so elimination stays indexed.
#[allow(clippy::needless_range_loop)]
pub fn solve4(a: &Mat4, b: &[f64; 4]) -> Result<[f64; 4]> {
    let mut m = a.0;
    let mut rhs = *b;
    let max_init = m
        .iter()
        .flatten()
        .fold(0.0_f64, |acc, &v| acc.max(v.abs()));
    if max_init == 0.0 {
        return Err(Error::SingularSystem { context: "4x4 solve: zero matrix" });
    }
    let threshold = 1e-12 * max_init;

    for col in 0..4 {
        let pivot_row = (col..4)
            .max_by(|&r, &s| m[r][col].abs().total_cmp(&m[s][col].abs()))
            .expect("nonempty range");
        if m[pivot_row][col].abs() < threshold {
            return Err(Error::SingularSystem { context: "4x4 solve: pivot below threshold" });
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for r in col + 1..4 {
            let f = m[r][col] / m[col][col];
            if f != 0.0 {
                for c in col..4 {
                    m[r][c] -= f * m[col][c];
                }
                rhs[r] -= f * rhs[col];
            }
        }
    }
    let mut x = [0.0; 4];
    for col in (0..4).rev() {
        let mut acc = rhs[col];
        for c in col + 1..4 {
            acc -= m[col][c] * x[c];
        }
        x[col] = acc / m[col][col];
    }
    Ok(x)
}

/// Classical Gram–Schmidt with one re-orthogonalization pass.
///
/// Each output is the normalized residual of the corresponding input against
/// the previously produced vectors, so it has positive dot product with that
/// residual by construction. Fails with `RankDeficient` (1-based position)
/// when a residual norm drops below `tol`.
pub fn gram_schmidt(vectors: &[Vec5], tol: f64) -> Result<Vec<Vec5>> {
    if vectors.len() > 5 {
        return Err(Error::Domain {
            message: format!("gram_schmidt takes at most 5 vectors, got {}", vectors.len()),
        });
    }
    let mut out: Vec<Vec5> = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        let mut r = *v;
        for q in &out {
            r = r - *q * r.dot(q);
        }
        // One re-orthogonalization pass cleans up the classical projection's
        // rounding against earlier directions.
        for q in &out {
            r = r - *q * r.dot(q);
        }
        let norm = r.norm();
        if norm.is_nan() || norm <= tol {
            return Err(Error::RankDeficient { position: i + 1, residual: norm });
        }
        out.push(r * (1.0 / norm));
    }
    Ok(out)
}

/// Solve a square dense system in place (Gaussian elimination with partial
/// pivoting). Used by the tracer for its 15x15 and 16x16 Newton systems.
// Rows `r` and `col` of the same matrix alias, so elimination stays indexed.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    let max_init = a
        .iter()
        .flatten()
        .fold(0.0_f64, |acc, &v| acc.max(v.abs()));
    if max_init == 0.0 {
        return Err(Error::SingularSystem { context: "dense solve: zero matrix" });
    }
    let threshold = 1e-14 * max_init;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .expect("nonempty range");
        if a[pivot_row][col].abs() < threshold {
            return Err(Error::SingularSystem { context: "dense solve: pivot below threshold" });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..n {
                    a[r][c] -= f * a[col][c];
                }
                b[r] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut acc = b[col];
        for c in col + 1..n {
            acc -= a[col][c] * x[c];
        }
        x[col] = acc / a[col][col];
    }
    Ok(x)
}
