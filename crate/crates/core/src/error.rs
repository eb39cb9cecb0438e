use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a composition: {0}")]
    InvalidComposition(String),
    #[error("entry {value} at position {position} exceeds the sub-diagonal bound {bound}")]
    NotSubDiagonal {
        position: usize,
        value: usize,
        bound: usize,
    },
    #[error("letter {letter} outside the alphabet {{0..{}}}", .alphabet_size.saturating_sub(1))]
    LetterOutOfRange { letter: usize, alphabet_size: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("code family {family} is not acceptable: {witness}")]
    NotAcceptable { family: String, witness: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("unknown code family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
