//! Double centering, inertia signatures, embeddability certificates and
//! classical (pseudo-)Euclidean scaling.
//!
//! The bridge between squared distances and scalar products is the centered
//! Gram matrix G = (I − J/n)(−½D)(I − J/n). Its entry G_ij equals the scalar
//! product of the displacements from the centroid to vertices i and j, so a
//! matrix D of Euclidean squared distances is recognizable by G having no
//! negative eigenvalues.

use crate::coords::Realization;
use crate::error::Error;
use crate::linalg::{EigenDecomposition, Matrix};
use crate::metric::SquaredDistanceMatrix;
use serde::Serialize;

/// A centered Gram matrix: symmetric with row and column sums zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    entries: Matrix,
}

impl GramMatrix {
    /// Validates symmetry and centering. Row sums may deviate from zero by
    /// at most `tol · max(1, ‖G‖_max) · n`.
    pub fn new(entries: Matrix, tol: f64) -> Result<Self, Error> {
        if entries.rows() != entries.cols() {
            return Err(Error::shape(format!(
                "Gram matrix must be square, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let n = entries.rows();
        let bound = tol * entries.max_abs().max(1.0);
        for i in 0..n {
            for j in i + 1..n {
                let deviation = (entries.get(i, j) - entries.get(j, i)).abs();
                if deviation > bound {
                    return Err(Error::NotSymmetric {
                        row: i,
                        col: j,
                        deviation,
                    });
                }
            }
        }
        for i in 0..n {
            let row_sum: f64 = entries.row(i).iter().sum();
            if row_sum.abs() > bound * (n as f64).max(1.0) {
                return Err(Error::shape(format!(
                    "Gram matrix is not centered: row {i} sums to {row_sum:e}"
                )));
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.max_abs()
    }
}

/// The double-centered Gram matrix G = (I − J/n)(−½D)(I − J/n), computed
/// entrywise as G_ij = −½ (D_ij − r_i − r_j + g) with r the row means of D
/// and g its grand mean.
pub fn gram_from_distances(d: &SquaredDistanceMatrix) -> GramMatrix {
    let n = d.n();
    let mut row_means = vec![0.0; n];
    for i in 0..n {
        row_means[i] = d.matrix().row(i).iter().sum::<f64>() / n as f64;
    }
    let grand_mean = row_means.iter().sum::<f64>() / n as f64;
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = -0.5 * (d.get(i, j) - row_means[i] - row_means[j] + grand_mean);
        }
    }
    GramMatrix {
        entries: Matrix::new(n, n, data).expect("well-shaped"),
    }
}

/// Inverts double centering: D_ij = G_ii + G_jj − 2 G_ij. Exact up to
/// floating-point rounding, so it is a genuine inverse of
/// [`gram_from_distances`].
pub fn distances_from_gram(g: &GramMatrix) -> SquaredDistanceMatrix {
    let n = g.n();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = g.get(i, i) + g.get(j, j) - 2.0 * g.get(i, j);
        }
    }
    SquaredDistanceMatrix::from_validated(Matrix::new(n, n, data).expect("well-shaped"))
}

/// Counts of eigenvalues of the centered Gram matrix above, below and within
/// the zero threshold. Because G annihilates the all-ones vector, `n_zero`
/// is always at least one; that zero is structural, not geometric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

/// Outcome of the Euclidean embeddability test. When `embeddable` is false,
/// `witness` holds a zero-sum weight vector with `witness_value` = λᵀDλ > 0,
/// an explicit violation of the negative-type inequalities that every
/// Euclidean squared-distance matrix satisfies.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddabilityReport {
    pub embeddable: bool,
    pub signature: Signature,
    pub witness: Option<Vec<f64>>,
    pub witness_value: Option<f64>,
}

fn centered_eig(
    d: &SquaredDistanceMatrix,
    tol: f64,
) -> Result<(GramMatrix, EigenDecomposition), Error> {
    let g = gram_from_distances(d);
    let eig = g.matrix().sym_eig(tol)?;
    Ok((g, eig))
}

fn classify(eig: &EigenDecomposition, threshold: f64) -> Signature {
    let mut sig = Signature {
        n_pos: 0,
        n_neg: 0,
        n_zero: 0,
    };
    for &lambda in eig.eigenvalues() {
        if lambda > threshold {
            sig.n_pos += 1;
        } else if lambda < -threshold {
            sig.n_neg += 1;
        } else {
            sig.n_zero += 1;
        }
    }
    sig
}

/// The inertia signature of the centered Gram matrix of `d`, with the zero
/// threshold `tol · max(1, ‖G‖_max)`.
pub fn signature_of(d: &SquaredDistanceMatrix, tol: f64) -> Result<Signature, Error> {
    let (g, eig) = centered_eig(d, tol)?;
    Ok(classify(&eig, tol * g.max_abs().max(1.0)))
}

/// Flips the sign so the entry of largest magnitude (earliest on ties) is
/// positive, then rescales so the largest positive entry equals one.
fn canonicalize_witness(mut w: Vec<f64>) -> Vec<f64> {
    let max_mag = w.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    // Entries within a relative whisker of the maximum count as tied, so
    // rounding noise cannot move the lead to a later index.
    let lead = w
        .iter()
        .position(|x| x.abs() >= max_mag * (1.0 - 1e-9))
        .unwrap_or(0);
    if w[lead] < 0.0 {
        for x in &mut w {
            *x = -*x;
        }
    }
    let max_pos = w
        .iter()
        .copied()
        .filter(|&x| x > 0.0)
        .fold(0.0f64, f64::max);
    if max_pos > 0.0 {
        for x in &mut w {
            *x /= max_pos;
        }
    }
    w
}

/// Tests whether `d` is the squared-distance matrix of some Euclidean point
/// set, which holds exactly when the centered Gram matrix has no eigenvalue
/// below `−tol · max(1, ‖G‖_max)`.
///
/// ```
/// use barymetric::{spectral::check_euclidean, SquaredDistanceMatrix, DEFAULT_TOL};
///
/// // Path distances around a square, squared: a metric, but not Euclidean.
/// let d = SquaredDistanceMatrix::from_rows(
///     &[
///         vec![0.0, 1.0, 4.0, 1.0],
///         vec![1.0, 0.0, 1.0, 4.0],
///         vec![4.0, 1.0, 0.0, 1.0],
///         vec![1.0, 4.0, 1.0, 0.0],
///     ],
///     DEFAULT_TOL,
/// )?;
/// let report = check_euclidean(&d, DEFAULT_TOL)?;
/// assert!(!report.embeddable);
/// assert!(report.witness_value.unwrap() > 0.0);
/// # Ok::<(), barymetric::Error>(())
/// ```
///
/// On failure the eigenvector of the most negative eigenvalue, projected to
/// sum zero and rescaled, is returned as a witness; its quadratic form value
/// λᵀDλ is re-evaluated directly against `d` rather than read off the
/// eigenvalue.
pub fn check_euclidean(d: &SquaredDistanceMatrix, tol: f64) -> Result<EmbeddabilityReport, Error> {
    let (g, eig) = centered_eig(d, tol)?;
    let threshold = tol * g.max_abs().max(1.0);
    let signature = classify(&eig, threshold);
    if signature.n_neg == 0 {
        return Ok(EmbeddabilityReport {
            embeddable: true,
            signature,
            witness: None,
            witness_value: None,
        });
    }
    // Eigenvalues are sorted descending, so the most negative one is last.
    let n = d.n();
    let mut witness = eig.vector(n - 1);
    let mean = witness.iter().sum::<f64>() / n as f64;
    for x in &mut witness {
        *x -= mean;
    }
    let witness = canonicalize_witness(witness);
    let value = d.matrix().quad_form(&witness, &witness)?;
    Ok(EmbeddabilityReport {
        embeddable: false,
        signature,
        witness: Some(witness),
        witness_value: Some(value),
    })
}

/// Classical scaling: realizes `d` exactly in a pseudo-Euclidean space of
/// dimension n_pos + n_neg, dropping the zero eigendirections. Coordinate k
/// of point i is √|λ_k| · V_ik, and axis k carries the sign of λ_k, positive
/// axes first.
pub fn realize(d: &SquaredDistanceMatrix, tol: f64) -> Result<Realization, Error> {
    let (g, eig) = centered_eig(d, tol)?;
    let threshold = tol * g.max_abs().max(1.0);
    let n = d.n();
    let kept: Vec<usize> = (0..n)
        .filter(|&k| eig.eigenvalues()[k].abs() > threshold)
        .collect();
    let mut signature = Vec::with_capacity(kept.len());
    let mut scales = Vec::with_capacity(kept.len());
    for &k in &kept {
        let lambda = eig.eigenvalues()[k];
        signature.push(if lambda > 0.0 { 1i8 } else { -1i8 });
        scales.push(lambda.abs().sqrt());
    }
    let mut points = vec![vec![0.0; kept.len()]; n];
    for (axis, &k) in kept.iter().enumerate() {
        let column = eig.vector(k);
        for i in 0..n {
            points[i][axis] = scales[axis] * column[i];
        }
    }
    Realization::new(points, signature)
}
