//! Regenerates golden values for a handful of presets and checks the
//! closed forms against them.

use underlay_secrecy::golden::{check_golden, regen_golden, GoldenFile};
use underlay_secrecy::presets;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let configs: Vec<_> = ["case2", "case9", "fig8-h8"]
        .iter()
        .flat_map(|name| {
            let p = presets::find(name).unwrap();
            [0.0, 10.0, 20.0].map(|db| (format!("{name}@{db}dB"), p.config_at(db)))
        })
        .collect();
    let file = regen_golden(&configs)?;
    let dir = tempfile_dir()?;
    let path = dir.join("golden.json");
    file.save(&path)?;
    let report = check_golden(&GoldenFile::load(&path)?)?;
    for c in &report.checks {
        println!(
            "{:<16} {:<15} stored {:.12} analytic {:.12} {}",
            c.label,
            c.metric,
            c.stored,
            c.analytic,
            if c.pass { "ok" } else { "MISMATCH" }
        );
    }
    assert!(report.passed());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn tempfile_dir() -> std::io::Result<std::path::PathBuf> {
    let dir = std::env::temp_dir().join(format!("underlay-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    Ok(dir)
}

#[allow(dead_code)]
fn main() {
    run().expect("golden_file example failed");
}
