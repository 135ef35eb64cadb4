//! Scenario files.
//!
//! A scenario is flat TOML with dotted keys for the per-link gains and the
//! modulation constants. Power ratios may be given in dB instead of watts;
//! they are converted once, at parse time, relative to `noise_w`.
//!
//! ```toml
//! bandwidth_hz = 5e6
//! noise_w = 1.0
//! pu_snr_db = 10.0          # or pu_power_w
//! peak_snr_db = 15.0        # or peak_power_w
//! pu_rate_bps = 32e3
//! outage_threshold = 0.01
//! secrecy_rate_bps = 32e3
//! omega.g = 4.0
//! omega.h = 4.0
//! omega.f = 4.0
//! omega.alpha = 2.0
//! omega.beta = 2.0
//! omega.phi = 4.0
//! modulation.eps = 2.0
//! modulation.eta = 1.0
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::channel::{Link, MeanGains, ScenarioConfig};
use crate::db_to_linear;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOmega {
    g: f64,
    h: f64,
    f: f64,
    alpha: f64,
    beta: f64,
    phi: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModulation {
    eps: f64,
    eta: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    bandwidth_hz: f64,
    noise_w: f64,
    pu_power_w: Option<f64>,
    pu_snr_db: Option<f64>,
    peak_power_w: Option<f64>,
    peak_snr_db: Option<f64>,
    pu_rate_bps: f64,
    outage_threshold: f64,
    secrecy_rate_bps: f64,
    omega: RawOmega,
    modulation: RawModulation,
}

fn power(name: &str, watts: Option<f64>, db: Option<f64>, noise_w: f64) -> Result<f64> {
    match (watts, db) {
        (Some(w), None) => Ok(w),
        (None, Some(db)) => Ok(noise_w * db_to_linear(db)),
        (Some(_), Some(_)) => Err(Error::parse(
            "scenario",
            format!("give either {name}_w or the matching _snr_db key, not both"),
        )),
        (None, None) => Err(Error::parse(
            "scenario",
            format!("missing {name}_w (or its _snr_db form)"),
        )),
    }
}

/// Parses and validates a scenario.
pub fn parse(text: &str) -> Result<ScenarioConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::parse("scenario", e))?;
    let cfg = ScenarioConfig {
        bandwidth_hz: raw.bandwidth_hz,
        pu_power_w: power("pu_power", raw.pu_power_w, raw.pu_snr_db, raw.noise_w)?,
        noise_w: raw.noise_w,
        peak_power_w: power("peak_power", raw.peak_power_w, raw.peak_snr_db, raw.noise_w)?,
        pu_rate_bps: raw.pu_rate_bps,
        outage_threshold: raw.outage_threshold,
        secrecy_rate_bps: raw.secrecy_rate_bps,
        omega: MeanGains {
            g: raw.omega.g,
            h: raw.omega.h,
            f: raw.omega.f,
            alpha: raw.omega.alpha,
            beta: raw.omega.beta,
            phi: raw.omega.phi,
        },
        modulation_eps: raw.modulation.eps,
        modulation_eta: raw.modulation.eta,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Canonical text form; powers in watts, floats in shortest round-trip form.
pub fn emit(cfg: &ScenarioConfig) -> String {
    let mut s = String::new();
    let mut line = |k: &str, v: f64| {
        writeln!(s, "{k} = {v:?}").expect("writing to a String");
    };
    line("bandwidth_hz", cfg.bandwidth_hz);
    line("noise_w", cfg.noise_w);
    line("pu_power_w", cfg.pu_power_w);
    line("peak_power_w", cfg.peak_power_w);
    line("pu_rate_bps", cfg.pu_rate_bps);
    line("outage_threshold", cfg.outage_threshold);
    line("secrecy_rate_bps", cfg.secrecy_rate_bps);
    for link in Link::ALL {
        line(&format!("omega.{}", link.name()), cfg.omega.get(link));
    }
    line("modulation.eps", cfg.modulation_eps);
    line("modulation.eta", cfg.modulation_eta);
    s
}

/// First 16 hex digits of the SHA-256 of [`emit`].
pub fn config_hash(cfg: &ScenarioConfig) -> String {
    let digest = Sha256::digest(emit(cfg).as_bytes());
    hex::encode(digest)[..16].to_string()
}

pub fn load(path: impl AsRef<Path>) -> Result<ScenarioConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(path.display().to_string(), message),
        other => other,
    })
}

pub fn save(cfg: &ScenarioConfig, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, emit(cfg)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
bandwidth_hz = 5e6
noise_w = 1.0
pu_snr_db = 10.0
peak_snr_db = 15.0
pu_rate_bps = 32e3
outage_threshold = 0.01
secrecy_rate_bps = 32e3
omega.g = 4.0
omega.h = 4.0
omega.f = 4.0
omega.alpha = 2.0
omega.beta = 2.0
omega.phi = 4.0
modulation.eps = 2.0
modulation.eta = 1.0
"#;

    #[test]
    fn parses_db_keys() {
        let cfg = parse(SAMPLE).unwrap();
        assert!((cfg.pu_power_w - 10.0).abs() < 1e-12);
        assert!((cfg.peak_power_w - 31.622_776_601_683_793).abs() < 1e-12);
        assert_eq!(cfg.omega.alpha, 2.0);
    }

    #[test]
    fn round_trip() {
        let cfg = parse(SAMPLE).unwrap();
        let text = emit(&cfg);
        assert_eq!(parse(&text).unwrap(), cfg);
        assert_eq!(config_hash(&cfg), config_hash(&parse(&text).unwrap()));
        assert_eq!(config_hash(&cfg).len(), 16);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse(&SAMPLE.replace("pu_snr_db = 10.0", "")).is_err());
        assert!(parse(&format!("{SAMPLE}pu_power_w = 3.0\n")).is_err());
        assert!(parse(&format!("{SAMPLE}omega.x = 3.0\n")).is_err());
        assert!(parse(&SAMPLE.replace("outage_threshold = 0.01", "outage_threshold = 1.5")).is_err());
    }

    #[test]
    fn file_io() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.toml");
        let cfg = parse(SAMPLE).unwrap();
        save(&cfg, &path).unwrap();
        assert_eq!(load(&path).unwrap(), cfg);
        let err = load(dir.path().join("missing.toml")).unwrap_err();
        assert!(err.to_string().contains("missing.toml"));
    }
}
