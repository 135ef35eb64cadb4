//! The ratio law `Z = a·X1/(b·X2 + 1)` behind every SINR in the model.

use underlay_secrecy::channel::sinr_distributions;
use underlay_secrecy::montecarlo::{ks_statistic, sample_ratio};
use underlay_secrecy::{presets, RatioDistribution};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let law = RatioDistribution::new(2.0, 1.0, 1.0, 1.0)?;
    for z in [0.0, 0.5, 2.0, 10.0] {
        println!("z = {z:>4}: F = {:.10}  f = {:.10}", law.cdf(z)?, law.pdf(z)?);
    }

    let n = 100_000;
    let mut samples = sample_ratio(&law, 7, n);
    let ks = ks_statistic(&mut samples, |z| law.cdf(z).unwrap_or(1.0));
    let critical = 1.63 / (n as f64).sqrt();
    println!("KS statistic over {n} draws: {ks:.5} (1% critical value {critical:.5})");

    let cfg = presets::find("case1").unwrap().config_at(10.0);
    let laws = sinr_distributions(&cfg, 20.0)?;
    println!("\nγ_P law: {:?}", laws.pu);
    println!("γ_E law: {:?}", laws.eav);
    println!("γ_S law: {:?}", laws.su);
    println!("Pr{{γ_P < γ_th}} = {:.6}", laws.pu.cdf(cfg.gamma_th())?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("ratio_distribution example failed");
}
