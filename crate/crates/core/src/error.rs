use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("one-line notation {0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<u32>),

    #[error("letter {letter} is outside [1, {max}]")]
    LetterOutOfRange { letter: u32, max: usize },

    #[error("word is not reduced: letter at position {position} does not lengthen the product")]
    NotReduced { position: usize },

    #[error("word does not multiply to the longest element")]
    NotLongestWord,

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("row {row} has no removable corner")]
    NotACorner { row: usize },

    #[error("rows {0} and {1} are not adjacent")]
    RowsNotAdjacent(usize, usize),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("{what} would exceed the cap of {cap}")]
    ResourceCap { what: &'static str, cap: u128 },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("malformed table: {0}")]
    Table(String),

    #[error("counting session has no entry for {0}; count the target permutation first")]
    NotPrepared(String),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
