//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use underlay_secrecy::{db_to_linear, MeanGains, ScenarioConfig};

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

/// A valid scenario drawn from the parameter ranges used across the tests.
pub fn random_config(rng: &mut impl Rng) -> ScenarioConfig {
    let mut omega = MeanGains::uniform(1.0);
    for link in underlay_secrecy::Link::ALL {
        omega.set(link, log_uniform(rng, 0.5, 8.0));
    }
    let etas = [1.0, 0.5, (std::f64::consts::PI / 8.0).sin().powi(2)];
    let cfg = ScenarioConfig {
        bandwidth_hz: 5e6,
        pu_power_w: db_to_linear(rng.random_range(-5.0..20.0)),
        noise_w: 1.0,
        peak_power_w: db_to_linear(rng.random_range(0.0..20.0)),
        pu_rate_bps: rng.random_range(8e3..64e3),
        outage_threshold: log_uniform(rng, 0.005, 0.1),
        secrecy_rate_bps: rng.random_range(4e3..64e3),
        omega,
        modulation_eps: 2.0,
        modulation_eta: etas[rng.random_range(0..etas.len())],
    };
    cfg.validate().expect("sampled scenario is valid");
    cfg
}

pub fn random_configs(seed: u64, n: usize) -> Vec<ScenarioConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_config(&mut rng)).collect()
}
