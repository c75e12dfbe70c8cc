//! Error type shared by every layer of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two elements from different ambient semigroups were combined.
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    /// An operation's domain precondition failed (empty corpus, n out of
    /// range, non-group carrier, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A lookup-table function was evaluated outside its table.
    #[error("element outside lookup table: {0}")]
    OutsideTable(String),

    /// A word power would have to be materialized beyond the size guard.
    #[error("word power too large to materialize: {0}")]
    TooLarge(String),

    /// An element, carrier, or function literal failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
