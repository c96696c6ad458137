use thiserror::Error;

/// Errors produced by validation and by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Dimensions of an argument do not match what the operation expects.
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("entries must be finite")]
    NonFinite,

    #[error("matrix is not symmetric: |A[{row}][{col}] - A[{col}][{row}]| = {deviation:e} exceeds tolerance")]
    NotSymmetric {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("squared-distance matrix needs a zero diagonal: entry [{index}][{index}] = {value:e}")]
    NonZeroDiagonal { index: usize, value: f64 },

    #[error("degenerate barycentric coordinates: weight sum {sum:e} is zero within tolerance")]
    DegenerateCoordinates { sum: f64 },

    #[error("coordinates are not normalized: weight sum = {sum}")]
    NotNormalized { sum: f64 },

    #[error("not a displacement vector: weight sum {sum:e} is nonzero beyond tolerance")]
    InvalidDisplacement { sum: f64 },

    #[error("point lies outside the affine span of the configuration (residual {residual:e})")]
    UnrepresentablePoint { residual: f64 },

    #[error("signature entries must be +1 or -1, got {value}")]
    InvalidSignature { value: i8 },

    #[error("edge lengths must be finite and non-negative, got {value}")]
    InvalidEdgeLength { value: f64 },

    #[error("triangle inequality violated: {longest} > {a} + {b}")]
    TriangleInequality { longest: f64, a: f64, b: f64 },

    #[error("eigendecomposition did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error(
        "instance too large for the exact check: {n} points exceeds the limit of {max}; \
         use the sampling check instead"
    )]
    InstanceTooLarge { n: usize, max: usize },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
