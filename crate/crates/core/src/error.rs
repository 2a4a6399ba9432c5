use thiserror::Error;

/// Errors raised when an input cannot be evaluated at all.
///
/// Mathematical verdicts (an axiom failing, a braid triple disagreeing) are
/// never errors; they travel inside the report types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table `{table}`: {detail}")]
    MalformedTable { table: String, detail: String },

    #[error("structure does not satisfy the {level} axioms: `{axiom}` fails at {witness:?}")]
    LevelMismatch {
        level: String,
        axiom: String,
        witness: Vec<usize>,
    },

    #[error("not a radical ring: element {element} has no quasi-inverse")]
    NotRadical { element: usize },

    #[error("size {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("set mismatch: expected size {expected}, found {found}")]
    SetMismatch { expected: usize, found: usize },

    #[error("slot {slot} out of range for {slots} tensor factors")]
    SlotOutOfRange { slot: usize, slots: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn malformed(table: &str, detail: impl Into<String>) -> Self {
        Error::MalformedTable {
            table: table.to_string(),
            detail: detail.into(),
        }
    }
}
