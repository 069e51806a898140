//! Error type shared across the crate.

/// Errors raised by algebra construction, root-system operations and the
/// r-matrix pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("m and n must both be at least 1 (got m={m}, n={n})")]
    InvalidRank { m: usize, n: usize },
    #[error("sl({m},{m}) is excluded: the invariant form degenerates at m = n")]
    DegenerateSl { m: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element does not lie in the algebra")]
    NotInAlgebra,
    #[error("reflection root must be an odd isotropic simple root of the diagram")]
    NotOddSimpleRoot,
    #[error("not a simple root of the diagram")]
    NotSimpleRoot,
    #[error("root is not positive for the diagram")]
    NotPositiveRoot,
    #[error("triple is not admissible")]
    NotAdmissible,
    #[error("the linear system for the Cartan parameter is inconsistent")]
    CartanSystemInconsistent,
    #[error("operator restricted to the positive part is not nilpotent")]
    NotNilpotent,
    #[error("composite root vector is not reachable by brackets of simple ones")]
    UnreachableRootVector,
    #[error("embedded bracket is only defined for leg positions 12-13, 12-23 and 13-23")]
    UnsupportedBracket,
    #[error("operator space mismatch")]
    SpaceMismatch,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid JSON payload: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
