use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid siteswap: {0}")]
    InvalidSiteswap(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid column set: {0}")]
    InvalidColumnSet(String),
    #[error("interval [{i},{j}] out of range for n={n}")]
    IntervalOutOfRange { i: i64, j: i64, n: usize },
    #[error("k mismatch: siteswap has k={f_k}, column set has {lambda_k} members")]
    KMismatch { f_k: usize, lambda_k: usize },
    #[error("n mismatch: {0} vs {1}")]
    ShapeMismatch(usize, usize),
    #[error("degenerate Grassmannian Gr({k},{n})")]
    DegenerateGrassmannian { k: usize, n: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cell {0} is not in the shape")]
    CellNotInShape(usize),
    #[error("the point is not on the variety")]
    PointNotOnVariety,
    #[error("window has {0} cells; brute force is limited to 24")]
    WindowTooLarge(usize),
    #[error("calibration failure: {0}")]
    CalibrationFailure(String),
    #[error("specialization is not a monomial in h: {0}")]
    NonMonomialSpecialization(String),
    #[error("permutation is not 321-avoiding")]
    Not321Avoiding,
    #[error("permutation too large for reduced-word enumeration (n={0}, limit 7)")]
    PermTooLarge(usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("cache corrupt at line {line}: {msg}")]
    CacheCorrupt { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
