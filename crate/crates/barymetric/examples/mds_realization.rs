//! Classical multidimensional scaling: turning a distance table back into
//! coordinates.

use barymetric::metric::SquaredDistanceMatrix;
use barymetric::spectral::realize;
use barymetric::DEFAULT_TOL;

fn main() {
    // Road distances between five towns on a (conveniently flat) plain,
    // in kilometers, squared on entry.
    let names = ["Alder", "Birch", "Cedar", "Dogwood", "Elm"];
    let km = [
        [0.0, 12.0, 20.0, 25.0, 17.0],
        [12.0, 0.0, 16.0, 28.0, 23.0],
        [20.0, 16.0, 0.0, 15.0, 21.0],
        [25.0, 28.0, 15.0, 0.0, 14.0],
        [17.0, 23.0, 21.0, 14.0, 0.0],
    ];
    let rows: Vec<Vec<f64>> = km
        .iter()
        .map(|r| r.iter().map(|x| x * x).collect())
        .collect();
    let d = SquaredDistanceMatrix::from_rows(&rows, DEFAULT_TOL).unwrap();

    let r = realize(&d, DEFAULT_TOL).unwrap();
    println!(
        "realized {} towns in {} dimension(s), axis signs {:?}\n",
        r.num_points(),
        r.dimension(),
        r.signature()
    );
    for (name, point) in names.iter().zip(r.points()) {
        let coords: Vec<String> = point.iter().map(|x| format!("{x:8.3}")).collect();
        println!("  {name:<8} {}", coords.join("  "));
    }

    // A distance table measured along roads is rarely exactly planar; the
    // axis signs report how far from Euclidean it is, and the round trip
    // shows the residual.
    let back = SquaredDistanceMatrix::from_realization(&r);
    let mut worst = 0.0f64;
    for i in 0..d.n() {
        for j in 0..d.n() {
            worst = worst.max((d.get(i, j) - back.get(i, j)).abs());
        }
    }
    println!("\nlargest round-trip deviation in squared km: {worst:.3e}");
    let negatives = r.signature().iter().filter(|&&s| s < 0).count();
    if negatives > 0 {
        println!("{negatives} axis(es) carry negative squared lengths: the table is not flat");
    }
}
