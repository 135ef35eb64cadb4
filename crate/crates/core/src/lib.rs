//! Performance and physical-layer-security metrics for an underlay
//! spectrum-sharing network observed by an eavesdropper.
//!
//! A secondary transmitter (SU-Tx) shares the primary user's band under a
//! joint constraint: the primary link's outage probability must stay below
//! `θ` and the SU power below a peak limit. An eavesdropper listens to the
//! primary transmission while also receiving SU interference. Every link is
//! block Rayleigh faded.
//!
//! The crate evaluates three metrics, each by three independent routes:
//!
//! | metric | closed form | quadrature | Monte Carlo |
//! |--------|-------------|------------|-------------|
//! | SU symbol error probability | [`analytic::sep_analytic`] | [`quadrature::sep_oracle`] | [`montecarlo::mc_metrics`] |
//! | probability of non-zero PU secrecy capacity | [`analytic::p_existence_analytic`] | [`quadrature::p_ex_oracle`] | same |
//! | PU secrecy outage probability | [`analytic::secrecy_outage_analytic`] | [`quadrature::secrecy_outage_oracle`] | same |
//!
//! ```
//! use underlay_secrecy::{analytic, presets, DerivedConstants};
//!
//! let cfg = presets::find("case1").unwrap().config_at(8.0);
//! let consts = DerivedConstants::from_config(&cfg);
//! let sep = analytic::sep_analytic(&consts, cfg.modulation_eps, cfg.modulation_eta);
//! assert!(sep.value > 0.0 && sep.value < 1.0);
//! ```

pub mod analytic;
pub mod channel;
pub mod config;
mod error;
pub mod golden;
pub mod montecarlo;
pub mod policy;
pub mod presets;
pub mod quadrature;
pub mod specialfn;
pub mod sweep;

pub use analytic::{Branch, Method, MetricResult};
pub use channel::{DerivedConstants, GainTuple, Link, MeanGains, RatioDistribution, ScenarioConfig};
pub use error::{Error, Result};
pub use policy::PowerDecision;

/// Converts a power ratio in dB to linear scale.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}
