use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("edge {edge}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("not 3-regular: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph too large: n = {n}, m = {m} (limits 128 vertices, 192 edges)")]
    TooLarge { n: usize, m: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("more than {cap} perfect matchings")]
    CapExceeded { cap: usize },
    #[error("graph has no 2-factor")]
    NoTwoFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("tuple size {0} outside 1..=6")]
    BadTupleSize(usize),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("factor {0} is not a perfect matching")]
    NotAPerfectMatching(usize),
    #[error("factors are not pairwise distinct")]
    FactorsNotDistinct,
    /// A structural statement that holds for every core failed; this is a
    /// bug or a counterexample, never an input error.
    #[error("core invariant violated: {0}")]
    InvariantViolated(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleCoverError {
    #[error("coloring is not a partition of E(G) into three perfect matchings")]
    NotAPartition,
    #[error("invalid core cover: {0}")]
    InvalidCoreCover(String),
    #[error("core is not bipartite")]
    CoreNotBipartite,
    #[error("the four factors have a common edge")]
    NonEmptyIntersection,
    #[error("the four factors do not cover every edge")]
    UnionNotAllEdges,
    #[error("factor {0} is not a perfect matching")]
    NotAPerfectMatching(usize),
    #[error("cycle space dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("no cycle cover exists (the edge set has a bridge)")]
    NoCover,
}
