//! Run manifests: the full parameter set of a generation run, serialized
//! next to its outputs so the run can be replayed bit-for-bit.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    /// The exact argument vector (without the program name); replaying it
    /// reproduces every output byte-for-byte.
    pub argv: Vec<String>,
    pub params: serde_json::Value,
    pub seed: u64,
    pub rng: String,
    pub outputs: Vec<PathBuf>,
    pub timing_ms: u64,
    pub version: String,
}

impl RunManifest {
    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        std::fs::write(path, json).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<RunManifest, Error> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| Error::InvalidConfig(e.to_string()))
    }
}
