//! Reading and writing scenario files.

use underlay_secrecy::config;

const SCENARIO: &str = "\
bandwidth_hz = 5e6
noise_w = 1.0
pu_snr_db = 12.0
peak_snr_db = 15.0
pu_rate_bps = 32e3
outage_threshold = 0.02
secrecy_rate_bps = 16e3
omega.g = 4.0
omega.h = 4.0
omega.f = 2.0
omega.alpha = 1.0
omega.beta = 2.0
omega.phi = 6.0
modulation.eps = 2.0
modulation.eta = 0.5
";

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = config::parse(SCENARIO)?;
    let canonical = config::emit(&cfg);
    println!("{canonical}");
    println!("hash {}", config::config_hash(&cfg));
    assert_eq!(config::parse(&canonical)?, cfg);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("scenario_file example failed");
}
