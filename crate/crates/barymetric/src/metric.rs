//! Scalar products, norms and distances computed straight from the
//! squared-distance matrix, with no coordinate realization involved.
//!
//! The identity doing all the work: if ū and v̄ are displacement vectors
//! (zero-sum weight vectors) encoding ambient vectors u and v over a point
//! configuration with squared-distance matrix D, then
//!
//! ```text
//!     ⟨u, v⟩ = ūᵀ (−½ D) v̄
//! ```
//!
//! The identity is purely algebraic, so it holds verbatim for
//! pseudo-Euclidean configurations, where some entries of D are negative.

use crate::coords::{displacement_between, BarycentricCoords, DisplacementVector, Realization};
use crate::error::Error;
use crate::linalg::Matrix;

/// A symmetric matrix of squared distances with a zero diagonal. Entries may
/// be negative: that is the pseudo-Euclidean case, not an error.
///
/// ```
/// use barymetric::{DisplacementVector, SquaredDistanceMatrix, DEFAULT_TOL};
///
/// // A 3-4-5 right triangle, squared distances only.
/// let d = SquaredDistanceMatrix::from_rows(
///     &[vec![0.0, 9.0, 16.0], vec![9.0, 0.0, 25.0], vec![16.0, 25.0, 0.0]],
///     DEFAULT_TOL,
/// )?;
/// let leg_a = DisplacementVector::between_vertices(0, 1, 3);
/// let leg_b = DisplacementVector::between_vertices(0, 2, 3);
/// // The legs are orthogonal, and no coordinates were ever involved.
/// assert!(d.scalar_product(&leg_a, &leg_b)?.abs() < 1e-12);
/// # Ok::<(), barymetric::Error>(())
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct SquaredDistanceMatrix {
    entries: Matrix,
}

impl SquaredDistanceMatrix {
    /// Validates symmetry and the zero diagonal, both within
    /// `tol · max(1, ‖D‖_max)`.
    pub fn new(entries: Matrix, tol: f64) -> Result<Self, Error> {
        if entries.rows() != entries.cols() {
            return Err(Error::shape(format!(
                "squared-distance matrix must be square, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let bound = tol * entries.max_abs().max(1.0);
        for i in 0..entries.rows() {
            for j in i + 1..entries.cols() {
                let deviation = (entries.get(i, j) - entries.get(j, i)).abs();
                if deviation > bound {
                    return Err(Error::NotSymmetric {
                        row: i,
                        col: j,
                        deviation,
                    });
                }
            }
            let diag = entries.get(i, i);
            if diag.abs() > bound {
                return Err(Error::NonZeroDiagonal {
                    index: i,
                    value: diag,
                });
            }
        }
        Ok(SquaredDistanceMatrix { entries })
    }

    pub fn from_rows(rows: &[Vec<f64>], tol: f64) -> Result<Self, Error> {
        SquaredDistanceMatrix::new(Matrix::from_rows(rows)?, tol)
    }

    /// Squared distances of an explicit realization, using its
    /// signature-weighted metric. Exactly symmetric with an exactly zero
    /// diagonal by construction.
    pub fn from_realization(r: &Realization) -> Self {
        let n = r.num_points();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = r.squared_distance_between(r.point(i), r.point(j));
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        SquaredDistanceMatrix {
            entries: Matrix::new(n, n, data).expect("well-shaped"),
        }
    }

    pub(crate) fn from_validated(entries: Matrix) -> Self {
        SquaredDistanceMatrix { entries }
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

    /// The scalar product ⟨u, v⟩ = ūᵀ(−½D)v̄ of the vectors encoded by two
    /// displacement vectors.
    pub fn scalar_product(
        &self,
        u: &DisplacementVector,
        v: &DisplacementVector,
    ) -> Result<f64, Error> {
        if u.len() != self.n() || v.len() != self.n() {
            return Err(Error::shape(format!(
                "matrix is {0}x{0} but displacements have lengths {1} and {2}",
                self.n(),
                u.len(),
                v.len()
            )));
        }
        Ok(-0.5 * self.entries.quad_form(u.weights(), v.weights())?)
    }

    /// Squared (signed) norm ‖u‖² = ūᵀ(−½D)ū.
    pub fn squared_norm(&self, u: &DisplacementVector) -> Result<f64, Error> {
        self.scalar_product(u, u)
    }

    /// Squared distance between the points named by two normalized
    /// coordinate vectors.
    pub fn squared_distance(
        &self,
        a: &BarycentricCoords,
        b: &BarycentricCoords,
    ) -> Result<f64, Error> {
        let d = displacement_between(a, b)?;
        self.squared_norm(&d)
    }
}

/// Plain (unsquared) edge lengths of a triangle with vertices 1, 2, 3.
///
/// No triangle inequality is enforced here: badly incompatible lengths
/// simply describe a non-Euclidean triangle, which the rest of the crate can
/// diagnose. Callers that want the classical check can use
/// [`TriangleEdges::check_triangle_inequality`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleEdges {
    pub l12: f64,
    pub l13: f64,
    pub l23: f64,
}

impl TriangleEdges {
    pub fn new(l12: f64, l13: f64, l23: f64) -> Result<Self, Error> {
        for l in [l12, l13, l23] {
            if !l.is_finite() || l < 0.0 {
                return Err(Error::InvalidEdgeLength { value: l });
            }
        }
        Ok(TriangleEdges { l12, l13, l23 })
    }

    /// Errors when some edge exceeds the sum of the other two beyond
    /// `tol · max(1, longest edge)`.
    pub fn check_triangle_inequality(&self, tol: f64) -> Result<(), Error> {
        let edges = [
            (self.l12, self.l13, self.l23),
            (self.l13, self.l12, self.l23),
            (self.l23, self.l12, self.l13),
        ];
        let scale = self.l12.max(self.l13).max(self.l23).max(1.0);
        for (longest, a, b) in edges {
            if longest > a + b + tol * scale {
                return Err(Error::TriangleInequality { longest, a, b });
            }
        }
        Ok(())
    }

    /// The 3×3 squared-distance matrix of the triangle.
    pub fn squared_distance_matrix(&self) -> SquaredDistanceMatrix {
        let m = Matrix::from_rows(&[
            vec![0.0, self.l12 * self.l12, self.l13 * self.l13],
            vec![self.l12 * self.l12, 0.0, self.l23 * self.l23],
            vec![self.l13 * self.l13, self.l23 * self.l23, 0.0],
        ])
        .expect("well-shaped");
        SquaredDistanceMatrix { entries: m }
    }
}

/// Squared distance between two points of a triangle given in barycentric
/// coordinates over its vertices. Works intrinsically: only the edge lengths
/// enter.
pub fn tri_squared_distance(
    edges: &TriangleEdges,
    p: &BarycentricCoords,
    q: &BarycentricCoords,
) -> Result<f64, Error> {
    if p.len() != 3 || q.len() != 3 {
        return Err(Error::shape(format!(
            "triangle coordinates must have length 3, got {} and {}",
            p.len(),
            q.len()
        )));
    }
    edges.squared_distance_matrix().squared_distance(p, q)
}

/// Both sides of the weighted parallel-axis identity
///
/// ```text
///     Σ λᵢ ‖y − xᵢ‖²  =  ‖y − b‖² + Σ λᵢ ‖xᵢ − b‖²,    b = Σ λⱼ xⱼ,
/// ```
///
/// evaluated in the metric of the realization. The weights must sum to one
/// but may be negative; the identity is algebraic and does not care.
pub fn parallel_axis_sides(
    r: &Realization,
    weights: &BarycentricCoords,
    y: &[f64],
) -> Result<(f64, f64), Error> {
    if weights.len() != r.num_points() {
        return Err(Error::shape(format!(
            "realization has {} points but weights have length {}",
            r.num_points(),
            weights.len()
        )));
    }
    if y.len() != r.dimension() {
        return Err(Error::shape(format!(
            "point has dimension {} but the realization lives in dimension {}",
            y.len(),
            r.dimension()
        )));
    }
    if !weights.is_normalized() {
        return Err(Error::NotNormalized { sum: weights.sum() });
    }
    let b = r.barycenter(weights)?;
    let mut lhs = 0.0;
    let mut spread = 0.0;
    for (w, x) in weights.weights().iter().zip(r.points()) {
        lhs += w * r.squared_distance_between(y, x);
        spread += w * r.squared_distance_between(x, &b);
    }
    let rhs = r.squared_distance_between(y, &b) + spread;
    Ok((lhs, rhs))
}

/// Both sides of the two-family energy identity
///
/// ```text
///     λᵀ D ν  =  Σ λᵢ ‖xᵢ − b_λ‖²  +  ‖b_λ − b_ν‖²  +  Σ νⱼ ‖b_ν − xⱼ‖²,
/// ```
///
/// where b_λ and b_ν are the barycenters of the two weight families. The
/// left side touches only the squared-distance matrix, the right side only
/// the realization.
pub fn pair_energy_sides(
    r: &Realization,
    d: &SquaredDistanceMatrix,
    lambda: &BarycentricCoords,
    nu: &BarycentricCoords,
) -> Result<(f64, f64), Error> {
    let n = r.num_points();
    if d.n() != n || lambda.len() != n || nu.len() != n {
        return Err(Error::shape(format!(
            "expected matching sizes, got realization {}, matrix {}, weights {} and {}",
            n,
            d.n(),
            lambda.len(),
            nu.len()
        )));
    }
    for w in [lambda, nu] {
        if !w.is_normalized() {
            return Err(Error::NotNormalized { sum: w.sum() });
        }
    }
    let lhs = d.matrix().quad_form(lambda.weights(), nu.weights())?;
    let b_lambda = r.barycenter(lambda)?;
    let b_nu = r.barycenter(nu)?;
    let mut rhs = r.squared_distance_between(&b_lambda, &b_nu);
    for (w, x) in lambda.weights().iter().zip(r.points()) {
        rhs += w * r.squared_distance_between(x, &b_lambda);
    }
    for (w, x) in nu.weights().iter().zip(r.points()) {
        rhs += w * r.squared_distance_between(&b_nu, x);
    }
    Ok((lhs, rhs))
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn euclidean_setup() -> impl Strategy<Value = (Realization, Vec<f64>)> {
        (1usize..=4, 2usize..=7).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-10.0f64..10.0, m * n + 3 * n).prop_map(move |flat| {
                let points: Vec<Vec<f64>> = flat[..m * n].chunks(m).map(|c| c.to_vec()).collect();
                (
                    Realization::euclidean(points).unwrap(),
                    flat[m * n..].to_vec(),
                )
            })
        })
    }

    fn normalized_from(raw: &[f64]) -> BarycentricCoords {
        let mut w: Vec<f64> = raw.to_vec();
        let sum: f64 = w.iter().sum();
        if sum.abs() < 0.2 {
            w[0] += 1.0;
        }
        let sum: f64 = w.iter().sum();
        for x in &mut w {
            *x /= sum;
        }
        BarycentricCoords::normalized(w, 1e-9).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn scalar_product_is_bilinear_and_symmetric((r, raw) in euclidean_setup()) {
            let n = r.num_points();
            let d = SquaredDistanceMatrix::from_realization(&r);
            let a = normalized_from(&raw[..n]);
            let b = normalized_from(&raw[n..2 * n]);
            let c = normalized_from(&raw[2 * n..3 * n]);
            let u = displacement_between(&a, &b).unwrap();
            let v = displacement_between(&a, &c).unwrap();
            let uv = d.scalar_product(&u, &v).unwrap();
            let vu = d.scalar_product(&v, &u).unwrap();
            prop_assert!((uv - vu).abs() <= 1e-9 * uv.abs().max(1.0));

            let sum = u.add(&v).unwrap();
            let left = d.scalar_product(&sum, &v).unwrap();
            let right = uv + d.scalar_product(&v, &v).unwrap();
            prop_assert!((left - right).abs() <= 1e-9 * right.abs().max(1.0));

            let scaled = d.scalar_product(&u.scaled(-2.5), &v).unwrap();
            prop_assert!((scaled + 2.5 * uv).abs() <= 1e-9 * uv.abs().max(1.0));
        }

        #[test]
        fn squared_distance_matches_oracle((r, raw) in euclidean_setup()) {
            let n = r.num_points();
            let d = SquaredDistanceMatrix::from_realization(&r);
            let p = normalized_from(&raw[..n]);
            let q = normalized_from(&raw[n..2 * n]);
            let via_d = d.squared_distance(&p, &q).unwrap();
            let pp = r.barycenter(&p).unwrap();
            let qq = r.barycenter(&q).unwrap();
            let direct = r.squared_distance_between(&pp, &qq);
            prop_assert!((via_d - direct).abs() <= 1e-9 * direct.abs().max(1.0));
        }
    }
}
