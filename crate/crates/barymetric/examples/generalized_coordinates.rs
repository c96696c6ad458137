//! Barycentric coordinates over redundant reference points.
//!
//! Four reference points in the plane are affinely dependent, so every
//! point has many coordinate representations. The representations differ
//! by elements of the configuration nullspace, and nothing metric ever
//! depends on the choice.

use barymetric::coords::{DisplacementVector, Realization};
use barymetric::metric::SquaredDistanceMatrix;
use barymetric::DEFAULT_TOL;

fn main() {
    // Corners of the unit square: n = 4 points in m = 2 dimensions.
    let square = Realization::euclidean(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap();
    let d = SquaredDistanceMatrix::from_realization(&square);

    // The center of the square, written as the average of all corners.
    let center = square.coords_of_point(&[0.5, 0.5], DEFAULT_TOL).unwrap();
    println!(
        "one coordinate vector for the center: {:?}",
        center.weights()
    );

    // The nullspace of the configuration: weight vectors that sum to zero
    // AND combine the corners to the zero vector. Adding any of them to a
    // coordinate vector yields another valid representation.
    let nullspace = square.configuration_nullspace(DEFAULT_TOL).unwrap();
    println!("nullspace dimension: {}", nullspace.len());
    for w in &nullspace {
        println!("  basis vector: {:?}", w.weights());
    }

    let shift = &nullspace[0];
    let alternative: Vec<f64> = center
        .weights()
        .iter()
        .zip(shift.weights())
        .map(|(a, b)| a + 0.7 * b)
        .collect();
    println!("another representation of the same point: {alternative:?}");

    // Metric quantities cannot tell the two apart. Measure the distance
    // from the center to corner 1 using both representations.
    let corner = [1.0, 0.0, 0.0, 0.0];
    let to_corner_a = DisplacementVector::new(
        center
            .weights()
            .iter()
            .zip(corner)
            .map(|(c, e)| e - c)
            .collect(),
        DEFAULT_TOL,
    )
    .unwrap();
    let to_corner_b = DisplacementVector::new(
        alternative.iter().zip(corner).map(|(c, e)| e - c).collect(),
        DEFAULT_TOL,
    )
    .unwrap();
    println!(
        "center-to-corner squared distance, first representation:  {}",
        d.squared_norm(&to_corner_a).unwrap()
    );
    println!(
        "center-to-corner squared distance, second representation: {}",
        d.squared_norm(&to_corner_b).unwrap()
    );
    println!("(both 0.5, the half-diagonal squared)");
}
