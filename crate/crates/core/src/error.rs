use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("sl is undefined on the empty string")]
    EmptySuffixLink,

    #[error("bijection maps parameters {first} and {second} to the same symbol {image}")]
    NotInjective { first: u32, second: u32, image: u32 },

    #[error("text must end with the sentinel `$`")]
    MissingSentinel,

    #[error("sentinel `$` occurs at position {0} before the end of the text")]
    EarlySentinel(usize),

    #[error("pattern contains the sentinel `$` at position {0}")]
    SentinelInPattern(usize),

    #[error("suffix trie would exceed the node budget of {budget} nodes")]
    NodeBudgetExceeded { budget: usize },

    #[error("index file, line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("unsupported index format version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },

    #[error("unknown experiment table `{0}`")]
    UnknownTable(String),

    #[error("internal construction error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
