//! Golden oracle values keyed by scenario hash.
//!
//! The file stores quadrature values for every preset on
//! [`presets::GOLDEN_GRID_DB`](crate::presets::GOLDEN_GRID_DB). `check`
//! recomputes the closed forms and compares.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analytic::{p_existence_analytic, secrecy_outage_analytic, sep_analytic};
use crate::channel::{DerivedConstants, ScenarioConfig};
use crate::config::{config_hash, emit};
use crate::error::{Error, Result};
use crate::policy::adaptive_power;
use crate::presets;
use crate::quadrature::{p_ex_oracle, secrecy_outage_oracle, sep_oracle, QuadratureSpec};

pub const FORMAT_VERSION: u32 = 1;

/// Absolute agreement required between closed forms and stored oracle values.
pub const CHECK_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleValue {
    pub value: f64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub label: String,
    /// Scenario in canonical text form, so the file is self-contained.
    pub scenario: String,
    pub su_power_w: f64,
    pub sep: OracleValue,
    pub p_ex: OracleValue,
    pub secrecy_outage: OracleValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub version: u32,
    pub entries: BTreeMap<String, GoldenEntry>,
}

/// Location of the golden file shipped with the crate.
pub fn default_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("golden.json")
}

/// `(label, scenario)` pairs covered by the shipped file.
pub fn default_configs() -> Vec<(String, ScenarioConfig)> {
    let mut out = Vec::new();
    for p in presets::all() {
        for db in presets::GOLDEN_GRID_DB {
            out.push((format!("{}@{db}dB", p.name), p.config_at(db)));
        }
    }
    out
}

fn oracle(r: crate::MetricResult) -> OracleValue {
    OracleValue {
        value: r.value,
        error_estimate: r.uncertainty,
    }
}

pub fn regen_golden(configs: &[(String, ScenarioConfig)]) -> Result<GoldenFile> {
    use rayon::prelude::*;
    let spec = QuadratureSpec::default();
    let entries: Vec<(String, GoldenEntry)> = configs
        .par_iter()
        .map(|(label, cfg)| {
            cfg.validate()?;
            let power = adaptive_power(cfg);
            let k = DerivedConstants::new(cfg, power.snr_d);
            Ok((
                config_hash(cfg),
                GoldenEntry {
                    label: label.clone(),
                    scenario: emit(cfg),
                    su_power_w: power.power_w,
                    sep: oracle(sep_oracle(cfg, &k, &spec)?),
                    p_ex: oracle(p_ex_oracle(cfg, &k, &spec)?),
                    secrecy_outage: oracle(secrecy_outage_oracle(cfg, &k, &spec)?),
                },
            ))
        })
        .collect::<Result<_>>()?;
    // presets that coincide share one entry; keep every label
    let mut merged: BTreeMap<String, GoldenEntry> = BTreeMap::new();
    for (key, entry) in entries {
        match merged.get_mut(&key) {
            Some(existing) => {
                existing.label.push_str(", ");
                existing.label.push_str(&entry.label);
            }
            None => {
                merged.insert(key, entry);
            }
        }
    }
    Ok(GoldenFile {
        version: FORMAT_VERSION,
        entries: merged,
    })
}

impl GoldenFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("golden file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GoldenFile = serde_json::from_str(text).map_err(|e| Error::parse("golden file", e))?;
        if file.version != FORMAT_VERSION {
            return Err(Error::parse(
                "golden file",
                format!("unsupported version {} (expected {FORMAT_VERSION})", file.version),
            ));
        }
        Ok(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
        std::fs::write(path, self.to_json()).map_err(|e| Error::io(path, e))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCheck {
    pub label: String,
    pub metric: &'static str,
    pub stored: f64,
    pub analytic: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GoldenReport {
    pub checks: Vec<GoldenCheck>,
    /// Entries whose key does not match the hash of their scenario.
    pub bad_keys: Vec<String>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.bad_keys.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &GoldenCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Compares the closed forms with every stored oracle value.
pub fn check_golden(file: &GoldenFile) -> Result<GoldenReport> {
    let mut report = GoldenReport::default();
    for (key, entry) in &file.entries {
        let cfg = crate::config::parse(&entry.scenario)?;
        if config_hash(&cfg) != *key {
            report.bad_keys.push(key.clone());
            continue;
        }
        let k = DerivedConstants::from_config(&cfg);
        let pairs = [
            (
                "sep",
                &entry.sep,
                sep_analytic(&k, cfg.modulation_eps, cfg.modulation_eta).value,
            ),
            ("p_ex", &entry.p_ex, p_existence_analytic(&k).value),
            (
                "secrecy_outage",
                &entry.secrecy_outage,
                secrecy_outage_analytic(&k).value,
            ),
        ];
        for (metric, stored, analytic) in pairs {
            report.checks.push(GoldenCheck {
                label: entry.label.clone(),
                metric,
                stored: stored.value,
                analytic,
                pass: (analytic - stored.value).abs() <= CHECK_TOLERANCE,
            });
        }
    }
    Ok(report)
}
