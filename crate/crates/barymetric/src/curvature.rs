//! Certificates for the one-negative-weight family of negative-type
//! inequalities, the discrete form of a non-negative-curvature condition.
//!
//! The condition asks that λᵀ D λ ≤ 0 for every zero-sum weight vector λ
//! with exactly one negative entry. Fixing the negative entry at vertex i
//! and normalizing turns the question into maximizing a quadratic form over
//! the standard simplex, one form per vertex; a matrix passes when every one
//! of those maxima stays at or below zero.
//!
//! The exact maximization enumerates the faces of the simplex, which is why
//! it is capped at [`MAX_EXACT_POINTS`] points. Larger instances go through
//! [`sample_check`], which can certify a violation but never its absence.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::metric::SquaredDistanceMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest point count accepted by the exact (face-enumerating) check.
pub const MAX_EXACT_POINTS: usize = 12;

/// How a curvature verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMethod {
    /// Exact maximization over every simplex face.
    FaceEnumeration,
    /// Randomized search; a clean run means "no violation found", not a
    /// certificate.
    Sampling { samples: u64, seed: u64 },
}

/// Per-vertex verdicts plus an overall flag. When `satisfied` is false the
/// witness is a zero-sum weight vector with exactly one negative entry whose
/// form value `witness_value` = λᵀDλ exceeds zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureReport {
    pub satisfied: bool,
    pub per_vertex: Vec<bool>,
    pub witness: Option<Vec<f64>>,
    pub witness_value: Option<f64>,
    pub method: CheckMethod,
}

/// Exact maximum of μᵀQμ over the standard simplex {μ ≥ 0, Σμ = 1},
/// returned with a maximizing point.
///
/// Candidates are the simplex vertices plus, for every face with at least
/// two active coordinates, the stationary point of the form restricted to
/// that face (found by solving the stationarity system with a multiplier for
/// the sum constraint). Singular stationarity systems contribute no
/// candidate: along their degenerate directions the form value is constant,
/// so the same value is already attained on a lower-dimensional face. Every
/// candidate is evaluated directly through the quadratic form.
pub fn max_quadratic_on_simplex(q: &Matrix, tol: f64) -> Result<(f64, Vec<f64>), Error> {
    let k = q.rows();
    if q.rows() != q.cols() || k == 0 {
        return Err(Error::shape(format!(
            "simplex maximization needs a nonempty square matrix, got {}x{}",
            q.rows(),
            q.cols()
        )));
    }
    if k > MAX_EXACT_POINTS - 1 {
        return Err(Error::InstanceTooLarge {
            n: k,
            max: MAX_EXACT_POINTS - 1,
        });
    }
    if !q.is_symmetric_within(tol) {
        return Err(Error::shape(
            "simplex maximization needs a symmetric matrix".to_string(),
        ));
    }

    let mut best_value = f64::NEG_INFINITY;
    let mut best_point = vec![0.0; k];
    for i in 0..k {
        let value = q.get(i, i);
        if value > best_value {
            best_value = value;
            best_point = vec![0.0; k];
            best_point[i] = 1.0;
        }
    }

    for mask in 1u32..(1 << k) {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        let support: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        let Some(mut mu) = face_stationary_point(q, &support) else {
            continue;
        };
        if mu.iter().any(|&x| x < 0.0 || !x.is_finite()) {
            continue;
        }
        let total: f64 = mu.iter().sum();
        if total <= 0.0 {
            continue;
        }
        for x in &mut mu {
            *x /= total;
        }
        let mut full = vec![0.0; k];
        for (&idx, &x) in support.iter().zip(&mu) {
            full[idx] = x;
        }
        let value = q.quad_form(&full, &full)?;
        if value > best_value {
            best_value = value;
            best_point = full;
        }
    }
    Ok((best_value, best_point))
}

/// Stationary point of μᵀQμ on the affine hull of a face: solves
/// `2 Q_SS μ = γ·1, Σμ = 1` for (μ, γ), or `None` when the system is
/// singular.
fn face_stationary_point(q: &Matrix, support: &[usize]) -> Option<Vec<f64>> {
    let s = support.len();
    let dim = s + 1;
    let mut a = vec![vec![0.0; dim]; dim];
    let mut b = vec![0.0; dim];
    for (row, &i) in support.iter().enumerate() {
        for (col, &j) in support.iter().enumerate() {
            a[row][col] = 2.0 * q.get(i, j);
        }
        a[row][s] = -1.0;
    }
    for col in 0..s {
        a[s][col] = 1.0;
    }
    b[s] = 1.0;
    solve_dense(a, b).map(|solution| solution[..s].to_vec())
}

/// Gaussian elimination with partial pivoting; `None` when a pivot falls
/// below the singularity threshold.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    let pivot_floor = f64::EPSILON * scale * 64.0 * n as f64;
    for col in 0..n {
        let mut pivot_row = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[pivot_row][col].abs() {
                pivot_row = row;
            }
        }
        if a[pivot_row][col].abs() <= pivot_floor {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut acc = b[col];
        for k in col + 1..n {
            acc -= a[col][k] * x[k];
        }
        x[col] = acc / a[col][col];
    }
    Some(x)
}

/// The (n−1)×(n−1) form M_i with M[a][b] = D[j_a][j_b] − D[i][j_a] − D[i][j_b]
/// over the vertices j ≠ i: for a nonnegative μ with λ = (μ embedded, λ_i = −Σμ),
/// μᵀ M_i μ = λᵀ D λ.
fn anchored_form(d: &SquaredDistanceMatrix, i: usize) -> Matrix {
    let n = d.n();
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let k = n - 1;
    let mut data = vec![0.0; k * k];
    for (a, &ja) in others.iter().enumerate() {
        for (b, &jb) in others.iter().enumerate() {
            data[a * k + b] = d.get(ja, jb) - d.get(i, ja) - d.get(i, jb);
        }
    }
    Matrix::new(k, k, data).expect("well-shaped")
}

fn cone_vector(i: usize, mu: &[f64], n: usize) -> Vec<f64> {
    let mut lambda = vec![0.0; n];
    let mut idx = 0;
    for j in 0..n {
        if j != i {
            lambda[j] = mu[idx];
            idx += 1;
        }
    }
    lambda[i] = -mu.iter().sum::<f64>();
    lambda
}

/// Rescales so the largest positive entry equals one. The sign pattern of a
/// curvature witness is fixed (one negative entry), so no sign flip happens.
fn rescale_witness(mut lambda: Vec<f64>) -> Vec<f64> {
    let max_pos = lambda
        .iter()
        .copied()
        .filter(|&x| x > 0.0)
        .fold(0.0f64, f64::max);
    if max_pos > 0.0 {
        for x in &mut lambda {
            *x /= max_pos;
        }
    }
    lambda
}

/// Exact check of the one-negative-weight inequalities by per-vertex simplex
/// maximization. Maxima within `tol · max(1, ‖D‖_max)` of zero count as
/// satisfied (the cone is read as closed). Instances beyond
/// [`MAX_EXACT_POINTS`] points are refused and should go through
/// [`sample_check`].
pub fn check_sturm(d: &SquaredDistanceMatrix, tol: f64) -> Result<CurvatureReport, Error> {
    let n = d.n();
    if n > MAX_EXACT_POINTS {
        return Err(Error::InstanceTooLarge {
            n,
            max: MAX_EXACT_POINTS,
        });
    }
    let threshold = tol * d.max_abs().max(1.0);
    let mut per_vertex = vec![true; n];
    let mut worst: Option<(f64, Vec<f64>)> = None;
    if n >= 2 {
        for i in 0..n {
            let form = anchored_form(d, i);
            let (value, mu) = max_quadratic_on_simplex(&form, tol)?;
            if value > threshold {
                per_vertex[i] = false;
                if worst.as_ref().is_none_or(|(w, _)| value > *w) {
                    worst = Some((value, cone_vector(i, &mu, n)));
                }
            }
        }
    }
    match worst {
        None => Ok(CurvatureReport {
            satisfied: true,
            per_vertex,
            witness: None,
            witness_value: None,
            method: CheckMethod::FaceEnumeration,
        }),
        Some((_, lambda)) => {
            let lambda = rescale_witness(lambda);
            let value = d.matrix().quad_form(&lambda, &lambda)?;
            Ok(CurvatureReport {
                satisfied: false,
                per_vertex,
                witness: Some(lambda),
                witness_value: Some(value),
                method: CheckMethod::FaceEnumeration,
            })
        }
    }
}

/// Randomized search for violations: draws a vertex uniformly and a
/// uniformly distributed simplex point over the remaining vertices, then
/// evaluates the form. Reports the worst violation found. A clean run only
/// means no violation was found, never that none exists; vertices that were
/// never sampled keep their passing mark for the same reason.
pub fn sample_check(
    d: &SquaredDistanceMatrix,
    samples: u64,
    seed: u64,
    tol: f64,
) -> CurvatureReport {
    let n = d.n();
    let threshold = tol * d.max_abs().max(1.0);
    let mut per_vertex_worst = vec![f64::NEG_INFINITY; n];
    let mut worst: Option<(f64, Vec<f64>)> = None;
    if n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let i = rng.gen_range(0..n);
            let mut lambda = vec![0.0; n];
            let mut total = 0.0;
            for (j, slot) in lambda.iter_mut().enumerate() {
                if j != i {
                    // Normalized exponentials sample the simplex uniformly.
                    let e = -(1.0 - rng.gen::<f64>()).ln();
                    *slot = e;
                    total += e;
                }
            }
            if total <= 0.0 {
                continue;
            }
            for (j, slot) in lambda.iter_mut().enumerate() {
                if j != i {
                    *slot /= total;
                }
            }
            lambda[i] = -1.0;
            let value = d
                .matrix()
                .quad_form(&lambda, &lambda)
                .expect("lambda length matches the matrix");
            if value > per_vertex_worst[i] {
                per_vertex_worst[i] = value;
            }
            if value > threshold && worst.as_ref().is_none_or(|(w, _)| value > *w) {
                worst = Some((value, lambda));
            }
        }
    }
    let per_vertex: Vec<bool> = per_vertex_worst.iter().map(|&w| w <= threshold).collect();
    let method = CheckMethod::Sampling { samples, seed };
    match worst {
        None => CurvatureReport {
            satisfied: true,
            per_vertex,
            witness: None,
            witness_value: None,
            method,
        },
        Some((_, lambda)) => {
            let lambda = rescale_witness(lambda);
            let value = d
                .matrix()
                .quad_form(&lambda, &lambda)
                .expect("lambda length matches the matrix");
            CurvatureReport {
                satisfied: false,
                per_vertex,
                witness: Some(lambda),
                witness_value: Some(value),
                method,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::Realization;
    use crate::DEFAULT_TOL;

    const TOL: f64 = DEFAULT_TOL;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    fn matrix(rows: &[Vec<f64>]) -> SquaredDistanceMatrix {
        SquaredDistanceMatrix::from_rows(rows, TOL).unwrap()
    }

    /// Center plus three leaves at distance 1, leaves pairwise at distance 2.
    fn tripod() -> SquaredDistanceMatrix {
        matrix(&[
            vec![0.0, 1.0, 1.0, 1.0],
            vec![1.0, 0.0, 4.0, 4.0],
            vec![1.0, 4.0, 0.0, 4.0],
            vec![1.0, 4.0, 4.0, 0.0],
        ])
    }

    fn pythagorean() -> SquaredDistanceMatrix {
        matrix(&[
            vec![0.0, 9.0, 16.0],
            vec![9.0, 0.0, 25.0],
            vec![16.0, 25.0, 0.0],
        ])
    }

    #[test]
    fn simplex_max_of_zero_matrix() {
        let (value, point) = max_quadratic_on_simplex(&Matrix::zeros(3, 3), TOL).unwrap();
        assert_close(value, 0.0, 0.0);
        assert_close(point.iter().sum::<f64>(), 1.0, 1e-12);
    }

    #[test]
    fn simplex_max_on_diagonal_form() {
        let q = Matrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 3.0]]).unwrap();
        let (value, point) = max_quadratic_on_simplex(&q, TOL).unwrap();
        assert_close(value, 3.0, 1e-12);
        assert_close(point[0], 0.0, 1e-12);
        assert_close(point[1], 1.0, 1e-12);
    }

    #[test]
    fn simplex_max_interior() {
        let q = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let (value, point) = max_quadratic_on_simplex(&q, TOL).unwrap();
        assert_close(value, 0.5, 1e-12);
        assert_close(point[0], 0.5, 1e-10);
        assert_close(point[1], 0.5, 1e-10);
    }

    #[test]
    fn simplex_max_rejects_oversize() {
        let q = Matrix::zeros(12, 12);
        assert!(matches!(
            max_quadratic_on_simplex(&q, TOL),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn two_points_always_satisfy() {
        let d = matrix(&[vec![0.0, 5.0], vec![5.0, 0.0]]);
        let report = check_sturm(&d, TOL).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.per_vertex, vec![true, true]);
        assert_eq!(report.method, CheckMethod::FaceEnumeration);
    }

    #[test]
    fn euclidean_triangle_satisfies() {
        let report = check_sturm(&pythagorean(), TOL).unwrap();
        assert!(report.satisfied);
        assert!(report.witness.is_none());
    }

    #[test]
    fn tripod_fails_at_the_center() {
        let report = check_sturm(&tripod(), TOL).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.per_vertex, vec![false, true, true, true]);
        let witness = report.witness.unwrap();
        for (got, want) in witness.iter().zip([-3.0, 1.0, 1.0, 1.0]) {
            assert_close(*got, want, 1e-9);
        }
        assert_close(report.witness_value.unwrap(), 6.0, 1e-9);
    }

    #[test]
    fn oversize_instances_are_refused() {
        let d = matrix(&vec![vec![0.0; 13]; 13]);
        assert!(matches!(
            check_sturm(&d, TOL),
            Err(Error::InstanceTooLarge { n: 13, max: 12 })
        ));
    }

    #[test]
    fn sampling_finds_the_tripod_violation() {
        let report = sample_check(&tripod(), 20_000, 1, TOL);
        assert!(!report.satisfied);
        let witness = report.witness.unwrap();
        let negatives = witness.iter().filter(|&&x| x < 0.0).count();
        assert_eq!(negatives, 1);
        let value = report.witness_value.unwrap();
        assert!(value > 0.0);
        // Re-evaluate the published witness independently.
        let direct = tripod().matrix().quad_form(&witness, &witness).unwrap();
        assert_close(direct, value, 1e-9 * value.max(1.0));
    }

    #[test]
    fn sampling_stays_clean_on_euclidean_input() {
        let report = sample_check(&pythagorean(), 20_000, 2, TOL);
        assert!(report.satisfied);
        assert_eq!(
            report.method,
            CheckMethod::Sampling {
                samples: 20_000,
                seed: 2
            }
        );
    }

    #[test]
    fn single_sample_two_points_finds_nothing() {
        let d = matrix(&[vec![0.0, 3.0], vec![3.0, 0.0]]);
        let report = sample_check(&d, 1, 42, TOL);
        assert!(report.satisfied);
    }

    #[test]
    fn verdict_is_scale_invariant() {
        let trip = tripod();
        let pyth = pythagorean();
        for scale in [1e-3, 1.0, 1e3] {
            let scaled: Vec<Vec<f64>> = (0..4)
                .map(|i| (0..4).map(|j| trip.get(i, j) * scale).collect())
                .collect();
            assert!(!check_sturm(&matrix(&scaled), TOL).unwrap().satisfied);

            let scaled: Vec<Vec<f64>> = (0..3)
                .map(|i| (0..3).map(|j| pyth.get(i, j) * scale).collect())
                .collect();
            assert!(check_sturm(&matrix(&scaled), TOL).unwrap().satisfied);
        }
    }

    #[test]
    fn euclidean_configurations_always_satisfy() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(1..=4);
            let points: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.gen_range(-10.0..10.0)).collect())
                .collect();
            let r = Realization::euclidean(points).unwrap();
            let d = SquaredDistanceMatrix::from_realization(&r);
            let report = check_sturm(&d, TOL).unwrap();
            assert!(report.satisfied, "Euclidean input must pass");
        }
    }

    #[test]
    fn exact_and_sampling_never_disagree_on_found_violations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for round in 0..30 {
            let n = rng.gen_range(3..=6);
            let mut rows = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let x = rng.gen_range(0.0..20.0);
                    rows[i][j] = x;
                    rows[j][i] = x;
                }
            }
            let d = matrix(&rows);
            let exact = check_sturm(&d, TOL).unwrap();
            let sampled = sample_check(&d, 5_000, round, TOL);
            if !sampled.satisfied {
                assert!(
                    !exact.satisfied,
                    "sampling found what the exact check missed"
                );
            }
        }
    }
}
