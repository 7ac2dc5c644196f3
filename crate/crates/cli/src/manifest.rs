//! Run manifest: what was produced, from which inputs, with which settings.

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use jtm_core::{Colormap, EncodingConfig, SpeedNormalization};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub created_unix: u64,
    pub config: ConfigSnapshot,
    pub inputs: Vec<FileEntry>,
    pub outputs: Vec<OutputEntry>,
}

#[derive(Debug, Serialize)]
pub struct ConfigSnapshot {
    pub levels: Vec<String>,
    pub planes: Vec<String>,
    pub width: u32,
    pub height: u32,
    pub margin: f64,
    pub background: [u8; 3],
    pub s_range: [f64; 2],
    pub b_range: [f64; 2],
    /// `null` means per-sequence maximum.
    pub fixed_v_max: Option<f64>,
    pub colormaps: Vec<ColormapSnapshot>,
    /// Command-specific settings (protocol, k, ...).
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub extra: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Serialize)]
pub struct ColormapSnapshot {
    pub name: &'static str,
    pub reversed: bool,
    /// `[position, r, g, b]`
    pub anchors: Vec<[f64; 4]>,
}

#[derive(Debug, Serialize)]
pub struct FileEntry {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct OutputEntry {
    pub path: String,
    pub sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plane: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn colormap(name: &'static str, map: &Colormap) -> ColormapSnapshot {
    ColormapSnapshot {
        name,
        reversed: map.is_reversed(),
        anchors: map.anchors().iter().map(|(p, c)| [*p, c.0[0], c.0[1], c.0[2]]).collect(),
    }
}

impl ConfigSnapshot {
    pub fn new(cfg: &EncodingConfig, levels: &[jtm_core::EncodingLevel], planes: &[jtm_core::Plane]) -> Self {
        ConfigSnapshot {
            levels: levels.iter().map(|l| l.tag().to_string()).collect(),
            planes: planes.iter().map(|p| p.tag().to_string()).collect(),
            width: cfg.canvas.width,
            height: cfg.canvas.height,
            margin: cfg.canvas.margin_fraction,
            background: cfg.canvas.background,
            s_range: [cfg.range.s_min, cfg.range.s_max],
            b_range: [cfg.range.b_min, cfg.range.b_max],
            fixed_v_max: match cfg.normalization {
                SpeedNormalization::PerSequence => None,
                SpeedNormalization::Fixed(v) => Some(v),
            },
            colormaps: vec![colormap("c1", &cfg.bank.c1), colormap("c2", &cfg.bank.c2), colormap("c3", &cfg.bank.c3)],
            extra: serde_json::Map::new(),
        }
    }
}

impl RunManifest {
    pub fn new(command: &str, config: ConfigSnapshot) -> Self {
        let created_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        RunManifest {
            tool: "jtm",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            created_unix,
            config,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}
