//! Deciding whether a squared-distance matrix is honestly Euclidean.
//!
//! The four-cycle metric (a square traversed along its edges) satisfies
//! the triangle inequality, yet no point set in any Euclidean space
//! reproduces its squared distances. `check_euclidean` refuses it and
//! hands back a witness: sum-zero weights whose energy form is positive,
//! something impossible for genuine Euclidean data.

use barymetric::metric::SquaredDistanceMatrix;
use barymetric::spectral::check_euclidean;
use barymetric::DEFAULT_TOL;

fn describe(name: &str, rows: &[Vec<f64>]) {
    let d = SquaredDistanceMatrix::from_rows(rows, DEFAULT_TOL).unwrap();
    let report = check_euclidean(&d, DEFAULT_TOL).unwrap();
    println!("{name}:");
    println!("  embeddable: {}", report.embeddable);
    println!(
        "  signature:  {} positive, {} negative, {} zero",
        report.signature.n_pos, report.signature.n_neg, report.signature.n_zero
    );
    if let Some(w) = &report.witness {
        println!("  witness:    {w:?}");
        println!("  form value: {}", report.witness_value.unwrap());
        println!("  (positive form value on sum-zero weights = certificate of refusal)");
    }
    println!();
}

fn main() {
    describe(
        "unit equilateral triangle",
        &[
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ],
    );

    // Path distances around a unit square, squared: adjacent corners at
    // distance 1, opposite corners at distance 2 (through a side), so the
    // squared matrix holds 1s and 4s.
    describe(
        "four-cycle path metric, squared",
        &[
            vec![0.0, 1.0, 4.0, 1.0],
            vec![1.0, 0.0, 1.0, 4.0],
            vec![4.0, 1.0, 0.0, 1.0],
            vec![1.0, 4.0, 1.0, 0.0],
        ],
    );

    // The same four points with the true chordal distances of the square
    // embed happily.
    describe(
        "unit square, chordal",
        &[
            vec![0.0, 1.0, 2.0, 1.0],
            vec![1.0, 0.0, 1.0, 2.0],
            vec![2.0, 1.0, 0.0, 1.0],
            vec![1.0, 2.0, 1.0, 0.0],
        ],
    );
}
