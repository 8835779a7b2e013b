use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("beta-set size {size} is smaller than the number of parts {parts}")]
    BetaSetTooSmall { size: usize, parts: usize },

    #[error("invalid hook: {0}")]
    InvalidHook(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("elementary operation not applicable: {0}")]
    IllegalOperation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("graph would have {needed} vertices, above the limit of {limit}")]
    TooManyVertices { needed: u128, limit: u128 },

    #[error("predicted invariant violated: {0}")]
    ConjectureViolation(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
