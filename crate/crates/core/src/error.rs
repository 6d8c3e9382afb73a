use std::fmt;

/// Location-tagged failure from [`crate::parse_poly`] or [`crate::parse_rat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.pos)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("degree order violated: deg A = {left} < deg B = {right}")]
    DegreeOrder { left: usize, right: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("k_r index r = {r} out of range 1..={n}")]
    IndexOutOfRange { r: usize, n: usize },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("delta must be nonzero")]
    DeltaZero,

    #[error("delta has length {got}, expected {expected}")]
    DeltaLength { got: usize, expected: usize },

    #[error("|delta| = {total} exceeds d0 = {d0}")]
    DeltaTooLarge { total: usize, d0: usize },

    #[error("roots must be distinct")]
    RepeatedRoots,
}

pub type Result<T> = std::result::Result<T, Error>;
