//! Everything works verbatim when squared distances go negative.
//!
//! In the Minkowski plane with inner product x1*y1 - x2*y2, squared
//! distances between events can be positive (space-like), negative
//! (time-like) or zero (light-like). The same matrix machinery applies.

use barymetric::coords::{DisplacementVector, Realization};
use barymetric::metric::SquaredDistanceMatrix;
use barymetric::spectral::{realize, signature_of};
use barymetric::DEFAULT_TOL;

fn main() {
    // Three events in the Minkowski plane, coordinates (x, t) with the
    // time axis carrying the minus sign.
    let events = Realization::new(
        vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, 0.5]],
        vec![1, -1],
    )
    .unwrap();
    let d = SquaredDistanceMatrix::from_realization(&events);

    println!("squared-distance matrix of three events:");
    for i in 0..3 {
        let row: Vec<f64> = (0..3).map(|j| d.get(i, j)).collect();
        println!("  {row:?}");
    }

    let n = d.n();
    for (i, j, kind) in [(0, 1, "space-like"), (0, 2, "light-like")] {
        let u = DisplacementVector::between_vertices(i, j, n);
        println!(
            "event {} -> event {}: squared length {} ({kind})",
            i + 1,
            j + 1,
            d.squared_norm(&u).unwrap()
        );
    }

    let sig = signature_of(&d, DEFAULT_TOL).unwrap();
    println!(
        "\nsignature of the centered Gram matrix: ({}, {}, {})",
        sig.n_pos, sig.n_neg, sig.n_zero
    );

    // Reconstruct coordinates. They will not match the originals (any
    // isometry of the plane is fair game) but the matrix comes back.
    let r = realize(&d, DEFAULT_TOL).unwrap();
    println!("realized axis signs: {:?}", r.signature());
    let back = SquaredDistanceMatrix::from_realization(&r);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((d.get(i, j) - back.get(i, j)).abs());
        }
    }
    println!("round-trip deviation: {worst:.3e}");
}
