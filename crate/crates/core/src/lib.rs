pub mod corpus;
pub mod error;
pub mod experiment;
pub mod index;
pub mod matching;
pub mod pv;
pub mod serial;
pub mod trie;

pub use error::{Error, Result};
pub use index::{build_plst, Plst, Stats};
pub use matching::{decide, locate, MatchOutcome};
