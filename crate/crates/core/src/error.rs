use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} requires degree at least {min}, got {degree}")]
    DegreeTooSmall {
        what: &'static str,
        degree: usize,
        min: usize,
    },
    #[error("{what} is limited to degree {max}, got {degree}")]
    DegreeTooLarge {
        what: &'static str,
        degree: usize,
        max: usize,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{what} requires at least {min} entries, got {got}")]
    TooShort {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("coefficient vector must end in at least two zeros before integration")]
    MissingTrailingZeros,
    #[error("reduction needs an odd-length vector, got length {0}")]
    EvenLength(usize),
    #[error("argument {0} lies outside [-1, 1]")]
    OutOfDomain(f64),
    #[error("interpolation points are not pairwise distinct")]
    DuplicatePoints,
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("stripped second-derivative system is singular")]
    Singular,
    #[error("unknown solve method `{0}`")]
    UnknownMethod(String),
}
