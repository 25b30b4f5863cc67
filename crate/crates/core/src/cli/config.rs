//! Run configuration: defaults, then `saxl-lab.json`, then the environment,
//! then command-line flags.

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, DEFAULT_MAX_PARTITIONS};
use crate::error::{Error, Result};

pub const DEFAULT_CONFIG_FILE: &str = "saxl-lab.json";
pub const CACHE_DIR_ENV: &str = "SAXL_LAB_CACHE_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

/// Every field has a default, so an empty `{}` is a valid config file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Worker threads; 0 lets the pool pick one per core.
    pub workers: usize,
    /// Largest `π(n)` any table or exhaustive scan may touch.
    pub max_partitions: usize,
    /// Wall-clock limit in seconds.
    pub time_limit_secs: Option<f64>,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            workers: 0,
            max_partitions: DEFAULT_MAX_PARTITIONS,
            time_limit_secs: None,
            cache_dir: None,
            format: Format::Json,
            seed: 0,
        }
    }
}

impl RunConfig {
    /// Reads `path`, or `saxl-lab.json` in the working directory when it
    /// exists; then applies the cache directory environment variable.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let mut cfg = match path {
            Some(p) => Self::from_file(p)?,
            None if Path::new(DEFAULT_CONFIG_FILE).is_file() => Self::from_file(Path::new(DEFAULT_CONFIG_FILE))?,
            None => RunConfig::default(),
        };
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            cfg.cache_dir = Some(PathBuf::from(dir));
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::InvalidArgument(format!("config {} is malformed: {e}", path.display())))
    }

    pub fn budget(&self) -> Budget {
        let budget = Budget {
            max_partitions: self.max_partitions,
            deadline: None,
        };
        match self.time_limit_secs {
            Some(s) => budget.with_time_limit(Duration::from_secs_f64(s.max(0.0))),
            None => budget,
        }
    }
}
