use thiserror::Error;

pub type Result<T> = std::result::Result<T, FrameError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrameError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(String),
    #[error("the vectors do not span the space (not a frame)")]
    NotAFrame,
    #[error("the frame is not Parseval (||S - I|| = {residual:e})")]
    NotParseval { residual: f64 },
    #[error("the frames are not pseudo-dual (smallest singular value of V*U is {min_singular:e})")]
    NotPseudoDual { min_singular: f64 },
    #[error("the frames are not dual (||V*U - I|| = {deviation:e})")]
    NotDual { deviation: f64 },
    #[error("subspaces are not complementary: {0}")]
    NotComplementary(String),
    #[error("matrix is not a projection (||F^2 - F|| = {residual:e})")]
    NotAProjection { residual: f64 },
    #[error("projection range differs from Im U (subspace distance {distance:e})")]
    WrongRange { distance: f64 },
    #[error("S is not a left inverse of T (||ST - I|| = {residual:e})")]
    NotLeftInverse { residual: f64 },
    #[error("transform is not surjective (rank {rank} < {target_dim})")]
    NotSurjective { rank: usize, target_dim: usize },
    #[error("no Parseval dual exists: {0}")]
    NoParsevalDual(String),
    #[error("x must be nonzero")]
    ZeroVector,
    #[error("{n} vectors exceeds the exhaustive limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("index set must contain {{1..{n0}}}")]
    PrefixNotContained { n0: usize },
    #[error("coefficient {index} is zero")]
    ZeroEntry { index: usize },
    #[error("coefficient vector must have unit norm (norm^2 = {norm_sq})")]
    NotUnit { norm_sq: f64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
}
