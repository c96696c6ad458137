//! Two identities that tie weighted averages of squared distances to
//! barycenters, for any weights summing to one, negative entries included.
//!
//! The first is the weighted parallel-axis rule: the lambda-average of
//! squared distances from a probe point y to the reference points equals
//! the squared distance from y to the barycenter plus the internal spread.
//! The second couples two weight families through the matrix alone:
//! lambda' D nu splits into two spreads plus the squared distance between
//! the two barycenters.

use barymetric::coords::{BarycentricCoords, Realization};
use barymetric::metric::{pair_energy_sides, parallel_axis_sides, SquaredDistanceMatrix};
use barymetric::DEFAULT_TOL;

fn main() {
    let r = Realization::euclidean(vec![
        vec![0.0, 0.0],
        vec![4.0, 0.0],
        vec![1.0, 3.0],
        vec![-2.0, 2.0],
    ])
    .unwrap();
    let d = SquaredDistanceMatrix::from_realization(&r);

    // Plain averaging: lambda = uniform weights, probe point y.
    let uniform = BarycentricCoords::uniform(4);
    let y = [2.0, 1.0];
    let (lhs, rhs) = parallel_axis_sides(&r, &uniform, &y).unwrap();
    println!("uniform weights:");
    println!("  average squared distance to y: {lhs}");
    println!("  |y - barycenter|^2 + spread:   {rhs}");

    // Affine extrapolation: weights sum to one but one of them is
    // negative, placing the barycenter outside the convex hull. The
    // identity is algebraic and does not notice.
    let signed = BarycentricCoords::normalized(vec![1.5, 0.25, -0.5, -0.25], DEFAULT_TOL).unwrap();
    let (lhs, rhs) = parallel_axis_sides(&r, &signed, &y).unwrap();
    println!("signed weights (1.5, 0.25, -0.5, -0.25):");
    println!("  weighted average of squared distances: {lhs}");
    println!("  decomposition through the barycenter:  {rhs}");

    // The two-family identity: its left side reads only the matrix, its
    // right side only the realization; agreement across 1e-15 is the
    // whole point.
    let nu = BarycentricCoords::normalized(vec![0.1, 0.2, 0.3, 0.4], DEFAULT_TOL).unwrap();
    let (lhs, rhs) = pair_energy_sides(&r, &d, &signed, &nu).unwrap();
    println!("two weight families:");
    println!("  lambda' D nu, matrix side:       {lhs}");
    println!("  spreads + barycenter gap, space: {rhs}");
}
