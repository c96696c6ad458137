//! Generalized barycentric coordinates, displacement vectors, and explicit
//! point realizations.
//!
//! "Generalized" means the reference points do not have to be affinely
//! independent, so coordinates of a point are usually not unique: two weight
//! vectors describing the same point differ by an element of the
//! configuration nullspace.

use crate::error::Error;
use crate::linalg::{max_abs_slice, Matrix};
use crate::DEFAULT_TOL;

/// Distinguishes weight vectors that sum to one from those with an arbitrary
/// nonzero sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordKind {
    Normalized,
    NonNormalized,
}

/// A weight vector over a point configuration. Normalized coordinates
/// (weights summing to one) name the point Σ wᵢ xᵢ; non-normalized
/// coordinates with sum s ≠ 0 name the point (1/s) Σ wᵢ xᵢ.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricCoords {
    weights: Vec<f64>,
    kind: CoordKind,
}

impl BarycentricCoords {
    /// Classifies a weight vector, rejecting sums within `tol·max(1, ‖w‖_max)`
    /// of zero, which name no point at all.
    pub fn new(weights: Vec<f64>, tol: f64) -> Result<Self, Error> {
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = weights.iter().sum();
        let scale = max_abs_slice(&weights).max(1.0);
        if sum.abs() <= tol * scale {
            return Err(Error::DegenerateCoordinates { sum });
        }
        let kind = if (sum - 1.0).abs() <= tol * scale {
            CoordKind::Normalized
        } else {
            CoordKind::NonNormalized
        };
        Ok(BarycentricCoords { weights, kind })
    }

    /// Like [`BarycentricCoords::new`] but insists the weights already sum
    /// to one.
    pub fn normalized(weights: Vec<f64>, tol: f64) -> Result<Self, Error> {
        let coords = Self::new(weights, tol)?;
        match coords.kind {
            CoordKind::Normalized => Ok(coords),
            CoordKind::NonNormalized => Err(Error::NotNormalized { sum: coords.sum() }),
        }
    }

    /// The i-th vertex, eᵢ.
    pub fn vertex(i: usize, n: usize) -> Self {
        assert!(i < n, "vertex index out of range");
        let mut weights = vec![0.0; n];
        weights[i] = 1.0;
        BarycentricCoords {
            weights,
            kind: CoordKind::Normalized,
        }
    }

    /// The centroid, (1/n, ..., 1/n).
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "need at least one point");
        BarycentricCoords {
            weights: vec![1.0 / n as f64; n],
            kind: CoordKind::Normalized,
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn is_normalized(&self) -> bool {
        self.kind == CoordKind::Normalized
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Divides by the weight sum, producing normalized coordinates for the
    /// same point. Already-normalized input comes back unchanged when its
    /// sum is exactly one.
    pub fn normalize(&self, tol: f64) -> Result<BarycentricCoords, Error> {
        let sum = self.sum();
        let scale = max_abs_slice(&self.weights).max(1.0);
        if sum.abs() <= tol * scale {
            return Err(Error::DegenerateCoordinates { sum });
        }
        if sum == 1.0 {
            return Ok(BarycentricCoords {
                weights: self.weights.clone(),
                kind: CoordKind::Normalized,
            });
        }
        Ok(BarycentricCoords {
            weights: self.weights.iter().map(|w| w / sum).collect(),
            kind: CoordKind::Normalized,
        })
    }
}

/// A weight vector summing to zero. These encode vectors (differences of
/// points): the displacement from Σ aᵢxᵢ to Σ bᵢxᵢ is b − a.
#[derive(Debug, Clone, PartialEq)]
pub struct DisplacementVector {
    weights: Vec<f64>,
}

impl DisplacementVector {
    /// Validates that the weights sum to zero within
    /// `tol·max(1, ‖w‖_max)`.
    pub fn new(weights: Vec<f64>, tol: f64) -> Result<Self, Error> {
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = weights.iter().sum();
        if sum.abs() > tol * max_abs_slice(&weights).max(1.0) {
            return Err(Error::InvalidDisplacement { sum });
        }
        Ok(DisplacementVector { weights })
    }

    pub fn zero(n: usize) -> Self {
        DisplacementVector {
            weights: vec![0.0; n],
        }
    }

    /// The displacement eⱼ − eᵢ from vertex i to vertex j.
    pub fn between_vertices(i: usize, j: usize, n: usize) -> Self {
        assert!(i < n && j < n, "vertex index out of range");
        let mut weights = vec![0.0; n];
        weights[i] -= 1.0;
        weights[j] += 1.0;
        DisplacementVector { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum of two displacements. Zero-sum weights are closed under addition,
    /// so no revalidation happens.
    pub fn add(&self, other: &DisplacementVector) -> Result<DisplacementVector, Error> {
        if self.len() != other.len() {
            return Err(Error::shape(format!(
                "cannot add displacements of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(DisplacementVector {
            weights: self
                .weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, factor: f64) -> DisplacementVector {
        DisplacementVector {
            weights: self.weights.iter().map(|w| w * factor).collect(),
        }
    }
}

/// The displacement b − a between two normalized coordinate vectors.
pub fn displacement_between(
    a: &BarycentricCoords,
    b: &BarycentricCoords,
) -> Result<DisplacementVector, Error> {
    if a.len() != b.len() {
        return Err(Error::shape(format!(
            "coordinate lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if !a.is_normalized() {
        return Err(Error::NotNormalized { sum: a.sum() });
    }
    if !b.is_normalized() {
        return Err(Error::NotNormalized { sum: b.sum() });
    }
    Ok(DisplacementVector {
        weights: b
            .weights()
            .iter()
            .zip(a.weights())
            .map(|(bi, ai)| bi - ai)
            .collect(),
    })
}

/// An explicit configuration of n points in a space with a diagonal metric
/// of signs `signature` (all +1 for the Euclidean case). The bilinear form is
/// ⟨u, v⟩ = Σ_k signature[k] · u_k · v_k, so squared distances may be
/// negative when the signature is mixed.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    points: Vec<Vec<f64>>,
    signature: Vec<i8>,
    affine_rank: usize,
}

impl Realization {
    /// Builds a realization and records the affine rank of the configuration
    /// (the dimension of the affine span of the points).
    pub fn new(points: Vec<Vec<f64>>, signature: Vec<i8>) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::shape(
                "a realization needs at least one point".to_string(),
            ));
        }
        let m = signature.len();
        for p in &points {
            if p.len() != m {
                return Err(Error::shape(format!(
                    "point has dimension {} but the signature has length {}",
                    p.len(),
                    m
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        for &s in &signature {
            if s != 1 && s != -1 {
                return Err(Error::InvalidSignature { value: s });
            }
        }
        let affine_rank = affine_rank_of(&points, m);
        Ok(Realization {
            points,
            signature,
            affine_rank,
        })
    }

    /// Realization in an ordinary Euclidean space (all-plus signature).
    pub fn euclidean(points: Vec<Vec<f64>>) -> Result<Self, Error> {
        let m = points.first().map_or(0, Vec::len);
        Realization::new(points, vec![1; m])
    }

    pub fn dimension(&self) -> usize {
        self.signature.len()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    pub fn affine_rank(&self) -> usize {
        self.affine_rank
    }

    /// The signature-weighted inner product of two ambient vectors.
    pub fn inner(&self, u: &[f64], v: &[f64]) -> f64 {
        assert!(
            u.len() == self.dimension() && v.len() == self.dimension(),
            "ambient vectors must match the realization dimension"
        );
        self.signature
            .iter()
            .zip(u.iter().zip(v))
            .map(|(&s, (a, b))| f64::from(s) * a * b)
            .sum()
    }

    pub fn squared_norm(&self, v: &[f64]) -> f64 {
        self.inner(v, v)
    }

    pub fn squared_distance_between(&self, a: &[f64], b: &[f64]) -> f64 {
        let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.squared_norm(&diff)
    }

    /// Σ wᵢ xᵢ for an arbitrary weight vector over the points.
    pub fn combination(&self, weights: &[f64]) -> Result<Vec<f64>, Error> {
        if weights.len() != self.num_points() {
            return Err(Error::shape(format!(
                "realization has {} points but weights have length {}",
                self.num_points(),
                weights.len()
            )));
        }
        let mut out = vec![0.0; self.dimension()];
        for (w, p) in weights.iter().zip(&self.points) {
            for (o, x) in out.iter_mut().zip(p) {
                *o += w * x;
            }
        }
        Ok(out)
    }

    /// The point named by normalized coordinates.
    pub fn barycenter(&self, coords: &BarycentricCoords) -> Result<Vec<f64>, Error> {
        if !coords.is_normalized() {
            return Err(Error::NotNormalized { sum: coords.sum() });
        }
        self.combination(coords.weights())
    }

    /// The ambient vector a displacement encodes: Σ ūᵢ xᵢ.
    pub fn vector(&self, displacement: &DisplacementVector) -> Result<Vec<f64>, Error> {
        self.combination(displacement.weights())
    }

    /// Normalized barycentric coordinates of an ambient point, chosen with
    /// minimum Euclidean norm among all valid weight vectors. Errors when the
    /// point lies outside the affine span.
    pub fn coords_of_point(&self, y: &[f64], tol: f64) -> Result<BarycentricCoords, Error> {
        if y.len() != self.dimension() {
            return Err(Error::shape(format!(
                "point has dimension {} but the realization lives in dimension {}",
                y.len(),
                self.dimension()
            )));
        }
        let stacked = self.stacked_configuration();
        let mut rhs: Vec<f64> = y.to_vec();
        rhs.push(1.0);
        let solved = stacked.solve_least_squares(&rhs, tol)?;
        let weights = solved.solution;

        // Verify both halves of the augmented system directly.
        let reached = self.combination(&weights)?;
        let coord_scale = self
            .points
            .iter()
            .map(|p| max_abs_slice(p))
            .fold(max_abs_slice(y), f64::max)
            .max(1.0);
        let position_error = reached
            .iter()
            .zip(y)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        let sum: f64 = weights.iter().sum();
        let sum_error = (sum - 1.0).abs();
        if position_error > tol * coord_scale || sum_error > tol * max_abs_slice(&weights).max(1.0)
        {
            return Err(Error::UnrepresentablePoint {
                residual: solved.residual,
            });
        }
        Ok(BarycentricCoords {
            weights,
            kind: CoordKind::Normalized,
        })
    }

    /// Orthonormal basis of the weight vectors that encode the zero vector:
    /// `{ w : Σ wᵢ = 0 and Σ wᵢ xᵢ = 0 }`. Adding any element to a
    /// displacement vector leaves the encoded vector unchanged.
    pub fn configuration_nullspace(&self, tol: f64) -> Result<Vec<DisplacementVector>, Error> {
        let basis = self.stacked_configuration().nullspace(tol)?;
        Ok(basis
            .into_iter()
            .map(|weights| DisplacementVector { weights })
            .collect())
    }

    /// The (m+1) × n matrix with the points as columns and an all-ones row
    /// appended.
    fn stacked_configuration(&self) -> Matrix {
        let m = self.dimension();
        let n = self.num_points();
        let mut data = vec![0.0; (m + 1) * n];
        for (j, p) in self.points.iter().enumerate() {
            for (i, x) in p.iter().enumerate() {
                data[i * n + j] = *x;
            }
        }
        for j in 0..n {
            data[m * n + j] = 1.0;
        }
        Matrix::new(m + 1, n, data).expect("construction is well-shaped")
    }
}

fn affine_rank_of(points: &[Vec<f64>], dim: usize) -> usize {
    let n = points.len();
    if n == 0 || dim == 0 {
        return 0;
    }
    let mut mean = vec![0.0; dim];
    for p in points {
        for (m, x) in mean.iter_mut().zip(p) {
            *m += x / n as f64;
        }
    }
    let mut data = vec![0.0; dim * n];
    for (j, p) in points.iter().enumerate() {
        for i in 0..dim {
            data[i * n + j] = p[i] - mean[i];
        }
    }
    let centered = Matrix::new(dim, n, data).expect("well-shaped");
    let gram = centered
        .transpose()
        .matmul(&centered)
        .expect("dimensions agree");
    let eig = match gram.sym_eig(DEFAULT_TOL) {
        Ok(e) => e,
        Err(_) => return 0,
    };
    let cutoff = DEFAULT_TOL * gram.max_abs().max(1.0);
    eig.eigenvalues().iter().filter(|&&l| l > cutoff).count()
}
