use std::path::PathBuf;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid dimension {n}: {reason}")]
    Dimension { n: u32, reason: &'static str },

    #[error("region {id} is not defined for n = {n}")]
    RegionMismatch { id: &'static str, n: u32 },

    #[error("exponent out of range: {0}")]
    Exponent(String),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("dyadic scale error: {0}")]
    Scale(String),

    #[error("fit error: {0}")]
    Fit(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
