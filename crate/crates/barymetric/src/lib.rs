//! Metric geometry computed directly on squared-distance matrices.
//!
//! Most algorithms on point configurations never need coordinates. Whenever
//! points enter only through pairwise squared distances, every affine notion
//! (scalar products of displacement vectors, distances between barycentric
//! combinations, Gram matrices, embeddability and curvature certificates)
//! can be evaluated from the squared-distance matrix alone:
//!
//! ```text
//! <u, v> = u' * (-D/2) * v        for zero-sum weight vectors u, v
//! ```
//!
//! The crate keeps that identity at the center and works unchanged for
//! pseudo-Euclidean data, where squared distances may be negative and the
//! matrix admits no Euclidean realization.
//!
//! Start with [`metric::SquaredDistanceMatrix`] and the weight types in
//! [`coords`]; certification lives in [`spectral`] and [`curvature`]. The
//! `examples/` directory walks through each capability end to end.

pub mod cli;
pub mod coords;
pub mod curvature;
pub mod error;
pub mod linalg;
pub mod metric;
pub mod spectral;

pub use coords::{BarycentricCoords, CoordKind, DisplacementVector, Realization};
pub use curvature::{CheckMethod, CurvatureReport};
pub use error::Error;
pub use metric::{SquaredDistanceMatrix, TriangleEdges};
pub use spectral::{EmbeddabilityReport, Signature};

/// Default relative tolerance for symmetry checks, zero-sum tests and
/// eigenvalue thresholds. All uses scale it by `max(1, magnitude)` of the
/// data at hand, so it behaves absolutely near zero and relatively for
/// large inputs.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
