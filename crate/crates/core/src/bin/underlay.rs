use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use underlay_secrecy::analytic::Method;
use underlay_secrecy::golden::{self, GoldenFile};
use underlay_secrecy::sweep::{self, parse_list, Cell, Metric, SweepParameter, SweepSpec};
use underlay_secrecy::{config, presets, ScenarioConfig};

#[derive(Parser)]
#[command(
    name = "underlay",
    version,
    about = "SU error rate and PU secrecy metrics for underlay spectrum sharing"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Scenario file (TOML)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100_000)]
    mc_samples: usize,
    /// Write the result table as CSV
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Comma-separated subset of a (analytic), q (quadrature), m (monte carlo)
    #[arg(long, global = true, default_value = "a,q,m")]
    methods: String,
}

#[derive(Subcommand)]
enum Command {
    /// Every metric by every selected method at one scenario
    Eval {
        /// Use a preset instead of --config
        #[arg(long)]
        preset: Option<String>,
        /// PU transmit SNR in dB when a preset is used
        #[arg(long, default_value_t = 10.0)]
        pu_snr_db: f64,
    },
    /// Sweep one parameter over a grid
    Sweep {
        #[arg(long)]
        preset: Option<String>,
        /// pu_snr_db, peak_snr_db, omega_<link>, rs or theta
        #[arg(long, default_value = "pu_snr_db")]
        param: String,
        /// `start:stop:step` (inclusive) or a comma-separated list
        #[arg(long, default_value = "-5:20:1")]
        grid: String,
        /// Comma-separated subset of sep, p_ex, secrecy_outage, pu_outage, su_power
        #[arg(long, default_value = "sep,p_ex,secrecy_outage")]
        metrics: String,
    },
    /// Golden oracle values
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
    /// Built-in figure scenarios
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum GoldenAction {
    /// Recompute oracle values for every preset
    Regen {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Compare closed forms with stored values; exits nonzero on mismatch
    Check {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    List,
    /// Sweep a preset's metric over the figure grid
    Run {
        name: String,
    },
}

fn parse_grid(s: &str) -> underlay_secrecy::Result<Vec<f64>> {
    let bad = |m: String| underlay_secrecy::Error::InvalidSweep(m);
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>().map_err(|e| bad(format!("grid `{s}`: {e}"))))
            .collect::<Result<_, _>>()?;
        let (start, stop, step) = (nums[0], nums[1], nums[2]);
        if !(step > 0.0) || stop < start {
            return Err(bad(format!("grid `{s}` needs start <= stop and step > 0")));
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize;
        return Ok((0..=n).map(|i| start + i as f64 * step).collect());
    }
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| bad(format!("grid `{s}`: {e}"))))
        .collect()
}

fn scenario(common: &Common, preset: Option<&str>, pu_snr_db: f64) -> underlay_secrecy::Result<ScenarioConfig> {
    match (preset, &common.config) {
        (Some(name), _) => presets::find(name)
            .map(|p| p.config_at(pu_snr_db))
            .ok_or_else(|| underlay_secrecy::Error::InvalidConfig(format!("unknown preset `{name}`"))),
        (None, Some(path)) => config::load(path),
        (None, None) => Err(underlay_secrecy::Error::InvalidConfig(
            "pass --config <path> or --preset <name>".into(),
        )),
    }
}

fn print_table(table: &sweep::SweepTable) {
    print!("{}", sweep::to_csv(table));
}

fn finish(common: &Common, table: &sweep::SweepTable) -> underlay_secrecy::Result<()> {
    match &common.out {
        Some(path) => {
            sweep::emit_csv(table, path)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print_table(table);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> underlay_secrecy::Result<ExitCode> {
    let common = &cli.common;
    let methods: Vec<Method> = parse_list(&common.methods)?;
    match cli.command {
        Command::Eval { preset, pu_snr_db } => {
            let cfg = scenario(common, preset.as_deref(), pu_snr_db)?;
            let x = underlay_secrecy::linear_to_db(cfg.pu_snr());
            let mut spec = SweepSpec::new(SweepParameter::PuSnrDb, vec![x]);
            spec.metrics = Metric::ALL.to_vec();
            spec.methods = methods;
            spec.mc_samples = common.mc_samples;
            spec.seed = common.seed;
            spec.validate()?;
            let columns = spec.columns();
            let cells = sweep::evaluate_point(&cfg, &columns, spec.mc_samples, spec.seed, &spec.quadrature);
            let table = sweep::SweepTable {
                parameter: spec.parameter,
                columns,
                rows: vec![sweep::SweepRow { x, cells }],
            };
            if common.out.is_some() {
                finish(common, &table)?;
            } else {
                let row = &table.rows[0];
                println!(
                    "{:<16} {:<12} {:>24} {:>12}",
                    "metric", "method", "value", "uncertainty"
                );
                for ((metric, method), cell) in table.columns.iter().zip(&row.cells) {
                    match cell {
                        Cell::Value { value, uncertainty } => println!(
                            "{:<16} {:<12} {:>24.16e} {:>12.3e}",
                            metric.name(),
                            method.name(),
                            value,
                            uncertainty
                        ),
                        Cell::Failed(msg) => println!("{:<16} {:<12} FAILED: {msg}", metric.name(), method.name()),
                    }
                }
            }
        }
        Command::Sweep {
            preset,
            param,
            grid,
            metrics,
        } => {
            let parameter: SweepParameter = param.parse()?;
            let base = scenario(common, preset.as_deref(), 0.0)?;
            let mut spec = SweepSpec::new(parameter, parse_grid(&grid)?);
            spec.metrics = parse_list(&metrics)?;
            spec.methods = methods;
            spec.mc_samples = common.mc_samples;
            spec.seed = common.seed;
            finish(common, &sweep::run_sweep(&base, &spec)?)?;
        }
        Command::Golden { action } => match action {
            GoldenAction::Regen { golden } => {
                let path = golden.unwrap_or_else(golden::default_path);
                let file = golden::regen_golden(&golden::default_configs())?;
                file.save(&path)?;
                eprintln!("wrote {} entries to {}", file.entries.len(), path.display());
            }
            GoldenAction::Check { golden } => {
                let path = golden.unwrap_or_else(golden::default_path);
                let report = golden::check_golden(&GoldenFile::load(&path)?)?;
                for key in &report.bad_keys {
                    println!("FAIL {key}: key does not match scenario hash");
                }
                for c in report.failures() {
                    println!(
                        "FAIL {} {}: analytic {:.16e} vs stored {:.16e}",
                        c.label, c.metric, c.analytic, c.stored
                    );
                }
                let worst = report
                    .checks
                    .iter()
                    .map(|c| (c.analytic - c.stored).abs())
                    .fold(0.0, f64::max);
                println!(
                    "{} checks, {} failed, max |analytic - oracle| = {worst:.3e}",
                    report.checks.len(),
                    report.failures().count() + report.bad_keys.len()
                );
                if !report.passed() {
                    return Ok(ExitCode::FAILURE);
                }
            }
        },
        Command::Presets { action } => match action {
            PresetAction::List => {
                for p in presets::all() {
                    println!("{:<18} fig {}  {:<15} {}", p.name, p.figure, p.metric.name(), p.summary);
                }
            }
            PresetAction::Run { name } => {
                let p = presets::find(&name)
                    .ok_or_else(|| underlay_secrecy::Error::InvalidConfig(format!("unknown preset `{name}`")))?;
                let mut spec = SweepSpec::new(SweepParameter::PuSnrDb, presets::figure_grid());
                spec.metrics = vec![p.metric];
                spec.methods = methods;
                spec.mc_samples = common.mc_samples;
                spec.seed = common.seed;
                finish(common, &sweep::run_sweep(&p.config, &spec)?)?;
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
