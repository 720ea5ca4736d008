/// Unified error type. Variants are deliberately coarse: callers branch on
/// the kind, messages carry the specifics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("guard limit exceeded: {what} = {value} > {limit} (set {} to lift)", crate::guard::OVERRIDE_ENV)]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("prefix labels are inconsistent with every vertex")]
    InconsistentPrefix,
    #[error("insufficient sample: need {needed} examples, got {got}")]
    InsufficientSample { needed: usize, got: usize },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable process exit code for the CLI. Keep in sync with README.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParam(_) => 2,
            Error::LengthMismatch(_) | Error::IndexOutOfRange { .. } => 3,
            Error::Format(_) => 4,
            Error::GuardExceeded { .. } => 5,
            Error::InconsistentPrefix => 6,
            Error::InsufficientSample { .. } => 7,
            Error::Io(_) => 8,
        }
    }
}
