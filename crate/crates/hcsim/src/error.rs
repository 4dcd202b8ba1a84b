use alloc::string::String;

/// Errors reported by this crate.
#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// An argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation requiring data received none.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// HC-dagger has no admissible index: every P-value lies below 1/N.
    #[error("all {0} P-values lie below 1/N; HC-dagger is undefined")]
    NoAdmissibleIndex(usize),

    /// A document id was not found where one was required.
    #[error("document '{0}' is not a member of the corpus")]
    UnknownDocument(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl core::fmt::Display) -> Self {
        Error::InvalidArgument(alloc::format!("{msg}"))
    }
}
