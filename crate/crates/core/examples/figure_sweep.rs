//! SEP of the case-1 scenario over PU transmit SNR, written as CSV.

use underlay_secrecy::analytic::Method;
use underlay_secrecy::presets;
use underlay_secrecy::sweep::{run_sweep, to_csv, Metric, SweepParameter, SweepSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let preset = presets::find("case1").unwrap();
    let mut spec = SweepSpec::new(SweepParameter::PuSnrDb, presets::figure_grid());
    spec.metrics = vec![Metric::Sep, Metric::SuPower];
    spec.methods = vec![Method::Analytic, Method::Quadrature];
    let table = run_sweep(&preset.config, &spec)?;
    print!("{}", to_csv(&table));

    let sep: Vec<f64> = table
        .series(Metric::Sep, Method::Quadrature)
        .unwrap()
        .into_iter()
        .map(|v| v.expect("every point converges"))
        .collect();
    let (i_min, v_min) = sep.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    println!("minimum SEP {v_min:.6} at {} dB", table.rows[i_min].x);

    if let Some(path) = std::env::args().nth(1) {
        underlay_secrecy::sweep::emit_csv(&table, &path)?;
        println!("wrote {path}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("figure_sweep example failed");
}
