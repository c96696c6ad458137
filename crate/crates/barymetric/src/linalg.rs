//! Dense real matrices and the spectral primitives the rest of the crate
//! builds on.
//!
//! Everything here targets small dense problems: configurations of up to a
//! few hundred points. The eigensolver is a cyclic Jacobi iteration, chosen
//! for its robustness and the orthonormality of the eigenvectors it produces
//! rather than for speed.

use crate::error::Error;

/// Dense real matrix, row-major storage. Values are immutable once built;
/// operations return fresh matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a matrix from row-major data. Rejects non-finite entries and
    /// length mismatches.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("rows have unequal lengths".to_string()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(row);
        }
        Matrix::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        assert!(i < self.rows, "row index out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        assert!(j < self.cols, "column index out of bounds");
        (0..self.rows)
            .map(|i| self.data[i * self.cols + j])
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![0.0; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.data[i * self.cols + k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += aik * rhs.data[k * rhs.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>, Error> {
        if v.len() != self.cols {
            return Err(Error::shape(format!(
                "matrix has {} columns but vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Largest absolute entry; zero for empty matrices.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_symmetric_within(&self, tol: f64) -> bool {
        self.check_symmetric(tol).is_ok()
    }

    fn check_symmetric(&self, tol: f64) -> Result<(), Error> {
        if self.rows != self.cols {
            return Err(Error::shape(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let bound = tol * self.max_abs().max(1.0);
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                let deviation = (self.get(i, j) - self.get(j, i)).abs();
                if deviation > bound {
                    return Err(Error::NotSymmetric {
                        row: i,
                        col: j,
                        deviation,
                    });
                }
            }
        }
        Ok(())
    }

    /// The quadratic/bilinear form aᵀ S b, evaluated directly as a sum of
    /// products.
    pub fn quad_form(&self, a: &[f64], b: &[f64]) -> Result<f64, Error> {
        if a.len() != self.rows || b.len() != self.cols {
            return Err(Error::shape(format!(
                "quadratic form over a {}x{} matrix needs lengths {} and {}, got {} and {}",
                self.rows,
                self.cols,
                self.rows,
                self.cols,
                a.len(),
                b.len()
            )));
        }
        let mut total = 0.0;
        for i in 0..self.rows {
            if a[i] == 0.0 {
                continue;
            }
            total += a[i] * dot(self.row(i), b);
        }
        Ok(total)
    }

    /// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
    ///
    /// `tol` is the relative symmetry tolerance used to validate the input.
    /// Eigenvalues come back sorted in descending order with a matching
    /// orthonormal set of eigenvector columns; the reconstruction
    /// V diag(λ) Vᵀ agrees with the input to machine-level accuracy.
    pub fn sym_eig(&self, tol: f64) -> Result<EigenDecomposition, Error> {
        self.check_symmetric(tol)?;
        let n = self.rows;
        if n == 0 {
            return Ok(EigenDecomposition {
                eigenvalues: vec![],
                vectors: Matrix::zeros(0, 0),
            });
        }

        // Work on a symmetrized copy; the iteration only reads the upper
        // triangle but keeping the full matrix simplifies the updates.
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = 0.5 * (self.get(i, j) + self.get(j, i));
            }
        }
        let mut v = Matrix::identity(n).data;
        let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        let mut b = d.clone();
        let mut z = vec![0.0; n];

        const MAX_SWEEPS: usize = 64;
        let mut converged = false;
        for sweep in 0..MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..n - 1 {
                for q in p + 1..n {
                    off += a[p * n + q].abs();
                }
            }
            if off == 0.0 {
                converged = true;
                break;
            }
            // During the first sweeps only rotate away entries above a
            // shrinking threshold; afterwards sweep everything.
            let thresh = if sweep < 3 {
                0.2 * off / ((n * n) as f64)
            } else {
                0.0
            };
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    let g = 100.0 * apq.abs();
                    // Entries that are negligible relative to both diagonal
                    // neighbours get snapped to zero once iteration settles.
                    if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                        a[p * n + q] = 0.0;
                        continue;
                    }
                    if apq.abs() <= thresh {
                        continue;
                    }
                    let h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        apq / h
                    } else {
                        let theta = 0.5 * h / apq;
                        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            t = -t;
                        }
                        t
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    let h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    let rotate = |a: &mut [f64], i1: usize, j1: usize, i2: usize, j2: usize| {
                        let g = a[i1 * n + j1];
                        let h = a[i2 * n + j2];
                        a[i1 * n + j1] = g - s * (h + g * tau);
                        a[i2 * n + j2] = h + s * (g - h * tau);
                    };
                    for j in 0..p {
                        rotate(&mut a, j, p, j, q);
                    }
                    for j in p + 1..q {
                        rotate(&mut a, p, j, j, q);
                    }
                    for j in q + 1..n {
                        rotate(&mut a, p, j, q, j);
                    }
                    for j in 0..n {
                        rotate(&mut v, j, p, j, q);
                    }
                }
            }
            for p in 0..n {
                b[p] += z[p];
                d[p] = b[p];
                z[p] = 0.0;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| d[j].total_cmp(&d[i]));
        let eigenvalues: Vec<f64> = order.iter().map(|&k| d[k]).collect();
        let mut vectors = Matrix::zeros(n, n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                vectors.data[row * n + new_col] = v[row * n + old_col];
            }
        }
        Ok(EigenDecomposition {
            eigenvalues,
            vectors,
        })
    }

    /// Orthonormal basis of the numerical kernel
    /// `{ w : ||A w||_inf <= tol * ||A||_max }`.
    ///
    /// Candidates come from the eigenvectors of AᵀA; each returned vector is
    /// verified against the bound directly, so the advertised property holds
    /// by construction. Full column rank yields an empty list.
    pub fn nullspace(&self, tol: f64) -> Result<Vec<Vec<f64>>, Error> {
        let n = self.cols;
        if n == 0 {
            return Ok(vec![]);
        }
        if self.rows == 0 {
            return Ok((0..n)
                .map(|i| {
                    let mut e = vec![0.0; n];
                    e[i] = 1.0;
                    e
                })
                .collect());
        }
        let gram = self.transpose().matmul(self)?;
        let eig = gram.sym_eig(tol)?;
        let bound = tol * self.max_abs();
        let mut basis = vec![];
        // Ascending eigenvalue order, so the most nearly-null direction
        // comes first.
        for k in (0..n).rev() {
            let v = eig.vector(k);
            let image = self.mul_vec(&v)?;
            let worst = image.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if worst <= bound {
                basis.push(v);
            }
        }
        Ok(basis)
    }

    /// Minimum-norm least-squares solution of A x = rhs, together with the
    /// Euclidean norm of the residual A x − rhs.
    ///
    /// Solved through the normal equations with a spectral cutoff: directions
    /// of AᵀA with eigenvalue at most `tol * max(1, ||AᵀA||_max)` are treated
    /// as rank-deficient and excluded, which is what makes the solution the
    /// minimum-norm one.
    pub fn solve_least_squares(&self, rhs: &[f64], tol: f64) -> Result<LeastSquares, Error> {
        if rhs.len() != self.rows {
            return Err(Error::shape(format!(
                "matrix has {} rows but right-hand side has length {}",
                self.rows,
                rhs.len()
            )));
        }
        let at = self.transpose();
        let gram = at.matmul(self)?;
        let eig = gram.sym_eig(tol)?;
        let c = at.mul_vec(rhs)?;
        let cutoff = tol * gram.max_abs().max(1.0);
        let mut x = vec![0.0; self.cols];
        for k in 0..self.cols {
            let lambda = eig.eigenvalues[k];
            if lambda <= cutoff {
                continue;
            }
            let vk = eig.vector(k);
            let coefficient = dot(&vk, &c) / lambda;
            for (xi, vi) in x.iter_mut().zip(&vk) {
                *xi += coefficient * vi;
            }
        }
        let image = self.mul_vec(&x)?;
        let residual = image
            .iter()
            .zip(rhs)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        Ok(LeastSquares {
            solution: x,
            residual,
        })
    }
}

/// Result of [`Matrix::sym_eig`]: eigenvalues in descending order and the
/// matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    vectors: Matrix,
}

impl EigenDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    /// The k-th eigenvector (column k).
    pub fn vector(&self, k: usize) -> Vec<f64> {
        self.vectors.column(k)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// V diag(λ) Vᵀ, mostly useful for accuracy checks.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.eigenvalues.len();
        let mut out = Matrix::zeros(n, n);
        for k in 0..n {
            let lambda = self.eigenvalues[k];
            let v = self.vector(k);
            for i in 0..n {
                for j in 0..n {
                    out.data[i * n + j] += lambda * v[i] * v[j];
                }
            }
        }
        out
    }
}

/// Minimum-norm least-squares solution and its residual norm.
#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub solution: Vec<f64>,
    pub residual: f64,
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn max_abs_slice(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TOL;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn eig_identity() {
        let m = Matrix::identity(3);
        let eig = m.sym_eig(DEFAULT_TOL).unwrap();
        for &lambda in eig.eigenvalues() {
            assert_close(lambda, 1.0, 1e-14);
        }
    }

    #[test]
    fn eig_diagonal_sorted_descending() {
        let m = Matrix::from_rows(&[vec![-2.0, 0.0], vec![0.0, 5.0]]).unwrap();
        let eig = m.sym_eig(DEFAULT_TOL).unwrap();
        assert_close(eig.eigenvalues()[0], 5.0, 1e-14);
        assert_close(eig.eigenvalues()[1], -2.0, 1e-14);
        let v0 = eig.vector(0);
        assert_close(v0[0].abs(), 0.0, 1e-14);
        assert_close(v0[1].abs(), 1.0, 1e-14);
    }

    #[test]
    fn eig_exchange_matrix() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let eig = m.sym_eig(DEFAULT_TOL).unwrap();
        assert_close(eig.eigenvalues()[0], 1.0, 1e-14);
        assert_close(eig.eigenvalues()[1], -1.0, 1e-14);
        let v = eig.vector(0);
        assert_close((v[0] - v[1]).abs(), 0.0, 1e-12);
    }

    #[test]
    fn eig_rejects_non_square_and_asymmetric() {
        let rect = Matrix::zeros(2, 3);
        assert!(matches!(rect.sym_eig(DEFAULT_TOL), Err(Error::Shape(_))));
        let asym = Matrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert!(matches!(
            asym.sym_eig(DEFAULT_TOL),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn quad_form_cases() {
        let id = Matrix::identity(2);
        let v = vec![1.0, 2.0];
        assert_close(id.quad_form(&v, &v).unwrap(), 5.0, 0.0);
        let zero = Matrix::zeros(3, 3);
        assert_close(zero.quad_form(&[1.0; 3], &[2.0; 3]).unwrap(), 0.0, 0.0);
        let ex = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_close(ex.quad_form(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 1.0, 0.0);
        assert!(ex.quad_form(&[1.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn nullspace_of_full_rank_is_empty() {
        let m = Matrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 3.0]]).unwrap();
        assert!(m.nullspace(DEFAULT_TOL).unwrap().is_empty());
    }

    #[test]
    fn nullspace_of_sum_row() {
        let m = Matrix::from_rows(&[vec![1.0, 1.0]]).unwrap();
        let basis = m.nullspace(DEFAULT_TOL).unwrap();
        assert_eq!(basis.len(), 1);
        let expected = 1.0 / 2.0f64.sqrt();
        assert_close(basis[0][0].abs(), expected, 1e-12);
        assert_close(basis[0][0] + basis[0][1], 0.0, 1e-12);
    }

    #[test]
    fn nullspace_of_square_configuration() {
        // Unit square corners as columns, plus an all-ones row.
        let m = Matrix::from_rows(&[
            vec![0.0, 1.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0, 1.0],
            vec![1.0, 1.0, 1.0, 1.0],
        ])
        .unwrap();
        let basis = m.nullspace(DEFAULT_TOL).unwrap();
        assert_eq!(basis.len(), 1);
        let w = &basis[0];
        let reference = [0.5, -0.5, 0.5, -0.5];
        let sign = if w[0] >= 0.0 { 1.0 } else { -1.0 };
        for (got, want) in w.iter().zip(reference) {
            assert_close(sign * got, want, 1e-10);
        }
    }

    #[test]
    fn least_squares_exact_and_overdetermined() {
        let id = Matrix::identity(3);
        let sol = id
            .solve_least_squares(&[1.0, 2.0, 3.0], DEFAULT_TOL)
            .unwrap();
        assert_close(sol.solution[2], 3.0, 1e-12);
        assert_close(sol.residual, 0.0, 1e-12);

        let col = Matrix::from_rows(&[vec![1.0], vec![1.0]]).unwrap();
        let sol = col.solve_least_squares(&[2.0, 4.0], DEFAULT_TOL).unwrap();
        assert_close(sol.solution[0], 3.0, 1e-12);
        assert_close(sol.residual, 2.0f64.sqrt(), 1e-12);
    }

    #[test]
    fn least_squares_minimum_norm() {
        // Rank-one system with solution set x1 + x2 = 1.
        let m = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let sol = m.solve_least_squares(&[0.0, 2.0], DEFAULT_TOL).unwrap();
        assert_close(sol.solution[0], 0.5, 1e-12);
        assert_close(sol.solution[1], 0.5, 1e-12);
        assert_close(sol.residual, 2.0f64.sqrt(), 1e-12);
    }
}
