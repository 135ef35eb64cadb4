//! The SU transmit power as the PU transmit SNR grows, and the PU outage it
//! leaves behind.

use underlay_secrecy::policy::{adaptive_power, pu_outage};
use underlay_secrecy::presets;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let preset = presets::find("case1").unwrap();
    println!(
        "{:>6} {:>12} {:>12} {:>8} {:>14}",
        "Pp/N0", "Ps [W]", "χ+", "peak", "PU outage"
    );
    for db in presets::figure_grid().into_iter().step_by(2) {
        let cfg = preset.config_at(db);
        let p = adaptive_power(&cfg);
        let out = pu_outage(&cfg, p.power_w);
        println!(
            "{db:>6} {:>12.6} {:>12.6e} {:>8} {:>14.10}",
            p.power_w, p.chi_plus, p.clamped_at_peak, out
        );
        if p.power_w > 0.0 && !p.clamped_at_peak {
            assert!((out - cfg.outage_threshold).abs() < 1e-12);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("power_policy example failed");
}
