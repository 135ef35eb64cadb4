use std::path::Path;
use std::process::{Command, Output};

fn underlay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_underlay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn presets_list_names_every_case() {
    let o = underlay(&["presets", "list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for k in 1..=12 {
        assert!(
            text.lines().any(|l| l.starts_with(&format!("case{k} "))),
            "case{k} missing"
        );
    }
}

#[test]
fn eval_prints_every_metric() {
    let o = underlay(&["eval", "--preset", "case1", "--pu-snr-db", "8", "--mc-samples", "20000"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    for metric in ["sep", "p_ex", "secrecy_outage", "pu_outage", "su_power"] {
        assert!(text.contains(metric), "{metric} missing from\n{text}");
    }
    assert!(text.contains("5.2350306719296"));
}

#[test]
fn eval_reads_a_scenario_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.toml");
    let cfg = underlay_secrecy::presets::find("case1").unwrap().config_at(8.0);
    underlay_secrecy::config::save(&cfg, &path).unwrap();
    let o = underlay(&["eval", "--config", path.to_str().unwrap(), "--methods", "a"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("5.2350306719296"));
}

fn sweep_to(path: &Path) -> Output {
    underlay(&[
        "sweep",
        "--preset",
        "case12",
        "--grid",
        "0:10:2",
        "--metrics",
        "p_ex,secrecy_outage",
        "--mc-samples",
        "20000",
        "--seed",
        "3",
        "--out",
        path.to_str().unwrap(),
    ])
}

#[test]
fn sweep_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    assert!(sweep_to(&a).status.success());
    assert!(sweep_to(&b).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("pu_snr_db,p_ex.analytic,p_ex.analytic.err"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn golden_check_passes_and_detects_tampering() {
    let o = underlay(&["golden", "check"]);
    assert!(o.status.success(), "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.json");
    let shipped = std::fs::read_to_string(underlay_secrecy::golden::default_path()).unwrap();
    let mut file = underlay_secrecy::golden::GoldenFile::from_json(&shipped).unwrap();
    file.entries.values_mut().next().unwrap().sep.value += 1e-6;
    file.save(&path).unwrap();
    let o = underlay(&["golden", "check", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn golden_regen_reproduces_shipped_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.json");
    let o = underlay(&["golden", "regen", "--golden", path.to_str().unwrap()]);
    assert!(o.status.success());
    let shipped = std::fs::read_to_string(underlay_secrecy::golden::default_path()).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), shipped);
}

#[test]
fn bad_input_exits_with_usage_error() {
    assert_eq!(underlay(&["eval", "--preset", "nope"]).status.code(), Some(2));
    assert_eq!(
        underlay(&["sweep", "--preset", "case1", "--grid", "5:1:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        underlay(&["eval", "--preset", "case1", "--methods", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn presets_run_covers_the_figure_grid() {
    let o = underlay(&["presets", "run", "fig8-h8", "--methods", "a,q"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 27);
}
