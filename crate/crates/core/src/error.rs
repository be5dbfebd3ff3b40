use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two antipodal points have no unique midpoint.
    #[error("antipodal points have no unique midpoint")]
    DegenerateMidpoint,

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// The ball is the unit ball at the origin, so the points are not contained
    /// in any hemisphere.
    #[error("ball corresponds to the full sphere")]
    FullSphere,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("oracle self-check failed: {0}")]
    OracleSelfCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
