use thiserror::Error;

/// Errors produced by complex construction, queries, and the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("facet list is empty")]
    EmptyFacetList,

    #[error("facet {0:?} contains a repeated vertex")]
    RepeatedVertex(Vec<u32>),

    #[error("facet must contain at least one vertex")]
    EmptyFacet,

    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("complex is not pure: facets of dimension {min_dim} and {max_dim} both present")]
    NotPure { min_dim: usize, max_dim: usize },

    #[error("boundary is only defined for pure complexes of dimension >= 1 (got {0})")]
    BoundaryDimension(isize),

    #[error("complex is closed (empty boundary); the double is only defined for complexes with nonempty boundary")]
    DoubleOfClosed,

    #[error(
        "facet {0} lies entirely in the boundary vertex set, so the two copies would share it; \
         cone or subdivide the complex first"
    )]
    FacetWithinBoundary(String),

    #[error(
        "dimension {0} is odd: the even-face formula applies to even dimensions only \
         (closed odd-dimensional manifolds have Euler characteristic 0)"
    )]
    OddDimension(isize),

    #[error("beta index {0} is out of range (defined for n >= -1)")]
    BetaIndex(i64),

    #[error("S_m is defined for positive odd m only (got {0})")]
    InvalidSmIndex(i64),

    #[error("polynomial degree {degree} exceeds d + 1 = {max} for reversal")]
    DegreeTooLarge { degree: isize, max: usize },

    #[error("f-vector must be nonempty with a positive top count")]
    InvalidFVector,

    #[error("join requires nonempty complexes")]
    JoinWithEmpty,

    #[error("line {line}: {message}")]
    FacetParse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
