use std::fmt;

/// Process exit status for each class of failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitClass {
    Success = 0,
    Mismatch = 1,
    Input = 2,
    Internal = 3,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] jacsyz_core::Error),
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("corpus line {line}: {message}")]
    CorpusParse { line: usize, message: String },
    #[error("{0}")]
    ExpectationMismatch(Mismatch),
}

/// One expected value that differs from the computed one.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Mismatch {
    pub entry: String,
    pub field: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry '{}': expected {} = {}, computed {}",
            self.entry, self.field, self.expected, self.found
        )
    }
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Core(e) => e.code(),
            Error::FileNotFound(_) => "FileNotFound",
            Error::Io { .. } => "IoError",
            Error::CorpusParse { .. } => "CorpusParseError",
            Error::ExpectationMismatch(_) => "ExpectationMismatch",
        }
    }

    pub fn class(&self) -> ExitClass {
        use jacsyz_core::Error as C;
        match self {
            Error::Core(e) => match e {
                C::InternalInconsistency(_)
                | C::ProfileInconsistent(_)
                | C::EulerCheckFailed
                | C::DimensionMismatch { .. } => ExitClass::Internal,
                C::BoundViolated(_) | C::InequalityViolated { .. } => ExitClass::Mismatch,
                _ => ExitClass::Input,
            },
            Error::FileNotFound(_) | Error::Io { .. } | Error::CorpusParse { .. } => ExitClass::Input,
            Error::ExpectationMismatch(_) => ExitClass::Mismatch,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
