//! JSON run configuration.
//!
//! Lengths are strings with a unit suffix (`"-20cm"`, `"26mm"`, `"6m"`), and
//! an attack focal length may be `"none"`. Every section is optional; command
//! line flags override individual fields.
//!
//! ```json
//! {
//!   "camera_focal_length": "26mm",
//!   "sweep": {
//!     "focal_lengths": ["-20cm", "-30cm", "-50cm"],
//!     "gaps": ["2cm", "4cm", "8cm", "12cm"],
//!     "object_distances": ["6m", "9m", "12m"]
//!   },
//!   "plan": {
//!     "target_depth": "8.78m", "object_distance": "6m",
//!     "candidate_focal_lengths": ["-20cm"], "gap_min": "1cm", "gap_max": "15cm"
//!   },
//!   "simulate": {
//!     "input": "scene.png", "output": "attacked.png",
//!     "focal_length": "-20cm", "gap": "2cm", "object_distance": "6m",
//!     "region": { "kind": "circle", "center_x": 64, "center_y": 64, "radius": 40 },
//!     "blur_per_meter": 1500
//!   },
//!   "detect": { "tile_size": 16, "score_threshold": 1500, "min_fraction": 0.05 },
//!   "output": "sweep.csv"
//! }
//! ```

use std::path::{Path, PathBuf};

use lensspoof_core::RegionSpec;
use serde::{Deserialize, Serialize};

use crate::units::{FocalSpec, Length};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub camera_focal_length: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simulate: Option<SimulateConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detect: Option<DetectConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub focal_lengths: Vec<FocalSpec>,
    pub gaps: Vec<Length>,
    pub object_distances: Vec<Length>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_depth: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_distance: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate_focal_lengths: Option<Vec<Length>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap_min: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap_max: Option<Length>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sidecar: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal_length: Option<FocalSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_distance: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionSpec>,
    /// Fixed blur sigma in pixels. Takes precedence over `blur_per_meter`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    /// Pixels of blur sigma per meter of focal-plane shift.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blur_per_meter: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetectConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tile_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score_threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_fraction: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config {path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
}

impl RunConfig {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })
    }
}
