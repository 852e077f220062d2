//! Run manifests: every parameter needed to reproduce a run bit for bit,
//! written next to the data it describes. The timestamp is informational and
//! excluded from the reproducibility contract.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub channel: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub channels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub master_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bins: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tie_tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    pub timestamp_unix: u64,
}

impl RunManifest {
    pub fn new(command: &'static str) -> Self {
        let timestamp_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        RunManifest {
            tool: "entfid",
            version: env!("CARGO_PKG_VERSION"),
            command,
            state: None,
            channel: None,
            channels: None,
            num_p: None,
            p_mode: None,
            num_states: None,
            master_seed: None,
            bins: None,
            tie_tolerance: None,
            scale: None,
            timestamp_unix,
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self).context("serializing manifest")?;
        std::fs::write(path, json + "\n")
            .with_context(|| format!("writing manifest {}", path.display()))
    }
}
