//! Closed forms against numerical integration and Monte Carlo at a few
//! preset points.

use underlay_secrecy::analytic::{p_existence_analytic, secrecy_outage_analytic, sep_analytic};
use underlay_secrecy::montecarlo::mc_metrics;
use underlay_secrecy::quadrature::{p_ex_oracle, secrecy_outage_oracle, sep_oracle, QuadratureSpec};
use underlay_secrecy::{presets, DerivedConstants};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let spec = QuadratureSpec::default();
    let n = 200_000;
    println!(
        "{:<12} {:<15} {:>14} {:>14} {:>10} {:>14} {:>8}",
        "scenario", "metric", "analytic", "quadrature", "|Δ|", "monte carlo", "z"
    );
    for (name, db) in [("case1", 8.0), ("case6", 0.0), ("fig5-phi10", 15.0), ("case12", 5.0)] {
        let cfg = presets::find(name).unwrap().config_at(db);
        let k = DerivedConstants::from_config(&cfg);
        let mc = mc_metrics(&cfg, n, 2024)?;
        let rows = [
            (
                "sep",
                sep_analytic(&k, cfg.modulation_eps, cfg.modulation_eta),
                sep_oracle(&cfg, &k, &spec)?,
                mc.sep,
            ),
            ("p_ex", p_existence_analytic(&k), p_ex_oracle(&cfg, &k, &spec)?, mc.p_ex),
            (
                "secrecy_outage",
                secrecy_outage_analytic(&k),
                secrecy_outage_oracle(&cfg, &k, &spec)?,
                mc.secrecy_outage,
            ),
        ];
        for (metric, a, q, m) in rows {
            let z = (m.value - a.value) / m.stderr.max(f64::MIN_POSITIVE);
            println!(
                "{:<12} {metric:<15} {:>14.10} {:>14.10} {:>10.1e} {:>14.10} {z:>8.2}",
                format!("{name}@{db}"),
                a.value,
                q.value,
                (a.value - q.value).abs(),
                m.value
            );
            assert!((a.value - q.value).abs() < 1e-7);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("oracle_crosscheck example failed");
}
