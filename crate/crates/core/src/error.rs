use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Verification failures carry a locus string so the CLI can report where a
/// check broke without re-running it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root of unity order {0} (must divide 21)")]
    UnsupportedOrder(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("prime {p} is unusable: {reason}")]
    BadPrime { p: u64, reason: String },

    #[error("degenerate extension: {0}")]
    DegenerateExtension(String),

    #[error("group closure exceeded the bound of {0} elements")]
    ClosureOverflow(usize),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("relator {0} does not evaluate to the identity")]
    RelatorFailure(String),

    #[error("multiplicity of W{index} is not an integer")]
    NonIntegralMultiplicity { index: usize },

    #[error("fixed point data has eigenvalue 1 at class {0}")]
    MalformedFixedPoint(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("verification failed at {locus}: {detail}")]
    Verification { locus: String, detail: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn verification(locus: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Verification {
            locus: locus.into(),
            detail: detail.into(),
        }
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
