use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is not primitive")]
    NotPrimitive,
    #[error("cells are not permuted setwise by generator {generator}")]
    CellsNotInvariant { generator: usize },
    #[error("enumeration cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("enumeration budget exceeded: {0}")]
    DegreeBudgetExceeded(String),
    #[error("orbit budget of {0} exceeded")]
    OrbitBudgetExceeded(usize),
    #[error("transformation is a permutation")]
    TIsPermutation,
    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("sandwich matrix is not regular")]
    NotRegular,
    #[error("sandwich matrix is not in Graham normal form")]
    NotNormalized,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unsupported field size {0}")]
    UnsupportedQ(u64),
    #[error("graph has {found} vertices, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for the errors that mean "ran out of budget" rather than "bad input".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded(_) | Error::DegreeBudgetExceeded(_) | Error::OrbitBudgetExceeded(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
