use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("polynomial is not homogeneous (found degrees {low} and {high})")]
    NotHomogeneous { low: u32, high: u32 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("degree {0} is too small")]
    DegreeTooSmall(i64),
    #[error("Euler relation x*f_x + y*f_y + z*f_z = d*f failed")]
    EulerCheckFailed,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree {degree} is outside the computed range {start}..={end}")]
    OutOfRange { degree: i64, start: i64, end: i64 },
    #[error("Hilbert function of S/J_f still increasing at degree {degree}; input is probably not reduced")]
    NonReducedInput { degree: i64 },
    #[error("defect module profile is inconsistent: {0}")]
    ProfileInconsistent(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("proven bound violated: {0}")]
    BoundViolated(String),
    #[error("q = {q} exceeds d = {d}; divergence-free syzygies only compute H^1 eigenspaces for q <= d")]
    QOutOfRange { q: i64, d: i64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("Walther inequality violated at j = {j}: n = {lhs} > h2 = {h2}")]
    InequalityViolated { j: i64, lhs: usize, h2: usize },
    #[error("degree {0} is even")]
    EvenDegree(i64),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::EulerCheckFailed => "EulerCheckFailed",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NonReducedInput { .. } => "NonReducedInput",
            Error::ProfileInconsistent(_) => "ProfileInconsistent",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::BoundViolated(_) => "BoundViolated",
            Error::QOutOfRange { .. } => "QOutOfRange",
            Error::NotApplicable(_) => "NotApplicable",
            Error::InequalityViolated { .. } => "InequalityViolated",
            Error::EvenDegree(_) => "EvenDegree",
        }
    }
}
