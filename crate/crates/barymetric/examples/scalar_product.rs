//! Scalar products straight from a squared-distance matrix.
//!
//! Nobody hands us coordinates here. We only know the six pairwise squared
//! distances of four points, yet we can still compute inner products,
//! angles and orthogonality between any displacement vectors, because for
//! zero-sum weight vectors u and v
//!
//!     <u, v> = u' * (-D/2) * v.

use barymetric::coords::DisplacementVector;
use barymetric::metric::SquaredDistanceMatrix;
use barymetric::DEFAULT_TOL;

fn main() {
    // A 3-4-5 right triangle with an extra point at the hypotenuse
    // midpoint. Squared distances only; the layout that produced them is
    // deliberately forgotten.
    let d = SquaredDistanceMatrix::from_rows(
        &[
            vec![0.0, 9.0, 16.0, 6.25],
            vec![9.0, 0.0, 25.0, 6.25],
            vec![16.0, 25.0, 0.0, 6.25],
            vec![6.25, 6.25, 6.25, 0.0],
        ],
        DEFAULT_TOL,
    )
    .expect("a valid squared-distance matrix");

    let n = d.n();
    let leg_a = DisplacementVector::between_vertices(0, 1, n);
    let leg_b = DisplacementVector::between_vertices(0, 2, n);
    let hypotenuse = DisplacementVector::between_vertices(1, 2, n);

    println!("squared lengths recovered from D:");
    println!("  |x1 -> x2|^2 = {}", d.squared_norm(&leg_a).unwrap());
    println!("  |x1 -> x3|^2 = {}", d.squared_norm(&leg_b).unwrap());
    println!("  |x2 -> x3|^2 = {}", d.squared_norm(&hypotenuse).unwrap());

    let product = d.scalar_product(&leg_a, &leg_b).unwrap();
    println!("\n<x1->x2, x1->x3> = {product}");
    println!("the right angle at x1 is visible without any coordinates");

    // The angle at x2 between the hypotenuse and the first leg.
    let back = leg_a.scaled(-1.0);
    let p = d.scalar_product(&back, &hypotenuse).unwrap();
    let cos = p / (d.squared_norm(&back).unwrap() * d.squared_norm(&hypotenuse).unwrap()).sqrt();
    println!("\ncos(angle at x2) = {cos}  (expected 3/5 = 0.6)");

    // Displacements may start and end at weighted combinations, not just
    // vertices: from the midpoint x4 toward the centroid of the triangle.
    let to_centroid =
        DisplacementVector::new(vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0], DEFAULT_TOL).unwrap();
    println!(
        "\n|midpoint -> centroid|^2 = {}",
        d.squared_norm(&to_centroid).unwrap()
    );
}
