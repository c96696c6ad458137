//! Distance queries inside a triangle known only by its edge lengths.
//!
//! This is the single-triangle workhorse behind meshes that store edge
//! lengths instead of vertex positions: any two points given in
//! barycentric coordinates can be measured against each other.

use barymetric::coords::BarycentricCoords;
use barymetric::metric::{tri_squared_distance, TriangleEdges};
use barymetric::DEFAULT_TOL;

fn main() {
    let edges = TriangleEdges::new(3.0, 4.0, 5.0).unwrap();
    edges.check_triangle_inequality(DEFAULT_TOL).unwrap();

    let vertex = BarycentricCoords::vertex(0, 3);
    let centroid = BarycentricCoords::uniform(3);
    let midpoint = BarycentricCoords::normalized(vec![0.0, 0.5, 0.5], DEFAULT_TOL).unwrap();

    let median = tri_squared_distance(&edges, &vertex, &midpoint).unwrap();
    println!("median from the right angle, squared: {median}");
    println!("  (half the hypotenuse: 2.5^2 = 6.25)");

    let spread = tri_squared_distance(&edges, &centroid, &vertex).unwrap();
    println!("centroid to vertex 1, squared: {spread}");

    // The incenter of a triangle has barycentric weights proportional to
    // the opposite side lengths: (a, b, c) = (5, 4, 3) here, since side a
    // is opposite vertex 1.
    let incenter =
        BarycentricCoords::normalized(vec![5.0 / 12.0, 4.0 / 12.0, 3.0 / 12.0], DEFAULT_TOL)
            .unwrap();
    let r2 = tri_squared_distance(&edges, &incenter, &vertex).unwrap();
    println!("incenter to the right-angle vertex, squared: {r2}");
    println!("  (exact value 2: the inradius is 1 and the vertex offset (1,1))");
}
