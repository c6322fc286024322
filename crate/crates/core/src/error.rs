use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group order {order} exceeds the configured maximum {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("element set belongs to a different group")]
    GroupMismatch,

    #[error("{0} is not a subgroup")]
    NotASubgroup(&'static str),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("subset item {item} ({text:?}) at offset {offset}: {source}")]
    SubsetItem {
        item: usize,
        offset: usize,
        text: String,
        source: Box<Error>,
    },

    #[error("scripted choice {element} at step {step} is not in the candidate set")]
    ScriptedChoiceInvalid { step: usize, element: usize },

    #[error("middle director is empty; the middle sub-factor algorithm is not applicable")]
    MidEmpty,

    #[error("starting element {0} is not in the middle director")]
    G0NotInMid(usize),

    #[error("trace was not produced by the middle sub-factor algorithm for these subgroups")]
    TraceMismatch,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("enumeration exceeded the limit of {limit}")]
    EnumerationLimitExceeded { limit: usize },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// Strips `SubsetItem` wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::SubsetItem { source, .. } => source.root(),
            e => e,
        }
    }
}
