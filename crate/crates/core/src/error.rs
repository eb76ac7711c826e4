use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the range the operation is defined on.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A string does not belong to the family an operation was asked to treat it as.
    #[error("'{string}' is not a {family} string: {constraint}")]
    Domain {
        string: String,
        family: &'static str,
        constraint: String,
    },

    /// A size limit guarding memory or running time was exceeded.
    #[error("{what} limited to n <= {cap}, got n = {n}")]
    ResourceCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("vertices {0} and {1} are not connected")]
    Disconnected(String, String),

    #[error("cannot parse '{input}': {reason}")]
    Parse { input: String, reason: String },
}
