use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation overflowed to a non-finite value")]
    NonFinite,
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("full-tree depth {0} exceeds the cap of {max}", max = crate::dynamics::MAX_TREE_DEPTH)]
    DepthTooLarge(u32),
    #[error("input point list must be non-empty")]
    EmptyInput,
    #[error("writing {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        #[source]
        source: std::io::Error,
    },
}
