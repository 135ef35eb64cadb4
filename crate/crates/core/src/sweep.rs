//! Parameter sweeps and CSV emission.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analytic::{p_existence_analytic, secrecy_outage_analytic, sep_analytic, Method, MetricResult};
use crate::channel::{DerivedConstants, Link, ScenarioConfig};
use crate::db_to_linear;
use crate::error::{Error, Result};
use crate::montecarlo::{mc_metrics, McMetrics, MIN_SAMPLES};
use crate::policy::{adaptive_power, pu_outage};
use crate::quadrature::{p_ex_oracle, pu_outage_oracle, secrecy_outage_oracle, sep_oracle, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    PuSnrDb,
    PeakSnrDb,
    Omega(Link),
    /// Secrecy target rate in bit/s.
    Rs,
    Theta,
}

impl SweepParameter {
    pub fn name(self) -> String {
        match self {
            SweepParameter::PuSnrDb => "pu_snr_db".into(),
            SweepParameter::PeakSnrDb => "peak_snr_db".into(),
            SweepParameter::Omega(l) => format!("omega_{}", l.name()),
            SweepParameter::Rs => "rs".into(),
            SweepParameter::Theta => "theta".into(),
        }
    }

    /// `cfg` with this parameter set to `value`; dB values are relative to `N0`.
    pub fn apply(self, cfg: &ScenarioConfig, value: f64) -> ScenarioConfig {
        let mut out = *cfg;
        match self {
            SweepParameter::PuSnrDb => out.pu_power_w = cfg.noise_w * db_to_linear(value),
            SweepParameter::PeakSnrDb => out.peak_power_w = cfg.noise_w * db_to_linear(value),
            SweepParameter::Omega(l) => out.omega.set(l, value),
            SweepParameter::Rs => out.secrecy_rate_bps = value,
            SweepParameter::Theta => out.outage_threshold = value,
        }
        out
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pu_snr_db" => SweepParameter::PuSnrDb,
            "peak_snr_db" => SweepParameter::PeakSnrDb,
            "rs" => SweepParameter::Rs,
            "theta" => SweepParameter::Theta,
            other => {
                let link = other
                    .strip_prefix("omega_")
                    .or_else(|| other.strip_prefix("omega."))
                    .and_then(Link::from_name)
                    .ok_or_else(|| Error::parse("sweep parameter", format!("unknown parameter `{other}`")))?;
                SweepParameter::Omega(link)
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Sep,
    PEx,
    SecrecyOutage,
    PuOutage,
    /// SU transmit power in watts. It comes from the policy alone, so it is
    /// emitted once, under the analytic method, whatever methods are chosen.
    SuPower,
}

impl Metric {
    pub const ALL: [Metric; 5] = [
        Metric::Sep,
        Metric::PEx,
        Metric::SecrecyOutage,
        Metric::PuOutage,
        Metric::SuPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Sep => "sep",
            Metric::PEx => "p_ex",
            Metric::SecrecyOutage => "secrecy_outage",
            Metric::PuOutage => "pu_outage",
            Metric::SuPower => "su_power",
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::parse("metric", format!("unknown metric `{s}`")))
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "analytic" => Ok(Method::Analytic),
            "q" | "quadrature" => Ok(Method::Quadrature),
            "m" | "mc" | "monte_carlo" => Ok(Method::MonteCarlo),
            other => Err(Error::parse("method", format!("unknown method `{other}`"))),
        }
    }
}

/// Parses a comma-separated list with `T::from_str`.
pub fn parse_list<T: FromStr<Err = Error>>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(T::from_str)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub grid: Vec<f64>,
    pub metrics: Vec<Metric>,
    pub methods: Vec<Method>,
    pub mc_samples: usize,
    pub seed: u64,
    pub quadrature: QuadratureSpec,
}

impl SweepSpec {
    pub fn new(parameter: SweepParameter, grid: Vec<f64>) -> Self {
        SweepSpec {
            parameter,
            grid,
            metrics: vec![Metric::Sep, Metric::PEx, Metric::SecrecyOutage],
            methods: vec![Method::Analytic, Method::Quadrature],
            mc_samples: 100_000,
            seed: 1,
            quadrature: QuadratureSpec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::InvalidSweep("grid is empty".into()));
        }
        if self.grid.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidSweep("grid values must be finite".into()));
        }
        let up = self.grid.windows(2).all(|w| w[0] < w[1]);
        let down = self.grid.windows(2).all(|w| w[0] > w[1]);
        if !(up || down) {
            return Err(Error::InvalidSweep("grid must be strictly monotone".into()));
        }
        if self.methods.contains(&Method::MonteCarlo) && self.mc_samples < MIN_SAMPLES {
            return Err(Error::InvalidSweep(format!(
                "monte carlo needs at least {MIN_SAMPLES} samples, got {}",
                self.mc_samples
            )));
        }
        self.quadrature.validate()
    }

    /// The `(metric, method)` columns in output order.
    pub fn columns(&self) -> Vec<(Metric, Method)> {
        let mut cols = Vec::new();
        for &m in &self.metrics {
            if m == Metric::SuPower {
                cols.push((m, Method::Analytic));
                continue;
            }
            for &method in &self.methods {
                cols.push((m, method));
            }
        }
        cols
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Value { value: f64, uncertainty: f64 },
    Failed(String),
}

impl Cell {
    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value { value, .. } => Some(*value),
            Cell::Failed(_) => None,
        }
    }

    fn from_result(r: Result<MetricResult>) -> Self {
        match r {
            Ok(m) => Cell::Value {
                value: m.value,
                uncertainty: m.uncertainty,
            },
            Err(e) => Cell::Failed(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub parameter: SweepParameter,
    pub columns: Vec<(Metric, Method)>,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn column_index(&self, metric: Metric, method: Method) -> Option<usize> {
        self.columns.iter().position(|&c| c == (metric, method))
    }

    /// Values of one column, `None` where the point failed.
    pub fn series(&self, metric: Metric, method: Method) -> Option<Vec<Option<f64>>> {
        let i = self.column_index(metric, method)?;
        Some(self.rows.iter().map(|r| r.cells[i].value()).collect())
    }
}

/// Evaluates every `(metric, method)` column at one scenario.
pub fn evaluate_point(
    cfg: &ScenarioConfig,
    columns: &[(Metric, Method)],
    mc_samples: usize,
    seed: u64,
    qspec: &QuadratureSpec,
) -> Vec<Cell> {
    if let Err(e) = cfg.validate() {
        return vec![Cell::Failed(e.to_string()); columns.len()];
    }
    let power = adaptive_power(cfg);
    let consts = DerivedConstants::new(cfg, power.snr_d);
    let mc: Option<Result<McMetrics>> = columns
        .iter()
        .any(|&(_, m)| m == Method::MonteCarlo)
        .then(|| mc_metrics(cfg, mc_samples, seed));
    columns
        .iter()
        .map(|&(metric, method)| {
            let r = match method {
                Method::Analytic => Ok(match metric {
                    Metric::Sep => sep_analytic(&consts, cfg.modulation_eps, cfg.modulation_eta),
                    Metric::PEx => p_existence_analytic(&consts),
                    Metric::SecrecyOutage => secrecy_outage_analytic(&consts),
                    Metric::PuOutage => {
                        MetricResult::analytic(pu_outage(cfg, power.power_w), crate::Branch::SingleForm)
                    }
                    Metric::SuPower => MetricResult::analytic(
                        power.power_w,
                        if power.power_w == 0.0 {
                            crate::Branch::ZeroSuPower
                        } else {
                            crate::Branch::SingleForm
                        },
                    ),
                }),
                Method::Quadrature => match metric {
                    Metric::Sep => sep_oracle(cfg, &consts, qspec),
                    Metric::PEx => p_ex_oracle(cfg, &consts, qspec),
                    Metric::SecrecyOutage => secrecy_outage_oracle(cfg, &consts, qspec),
                    Metric::PuOutage => pu_outage_oracle(cfg, power.power_w, qspec),
                    Metric::SuPower => Err(Error::InvalidSweep("su_power has no quadrature form".into())),
                },
                Method::MonteCarlo => match mc.as_ref().expect("computed when requested") {
                    Ok(m) => match metric {
                        Metric::Sep => Ok(m.sep.to_metric()),
                        Metric::PEx => Ok(m.p_ex.to_metric()),
                        Metric::SecrecyOutage => Ok(m.secrecy_outage.to_metric()),
                        Metric::PuOutage => Ok(m.pu_outage.to_metric()),
                        Metric::SuPower => Err(Error::InvalidSweep("su_power has no monte carlo form".into())),
                    },
                    Err(e) => Err(Error::InvalidSweep(e.to_string())),
                },
            };
            Cell::from_result(r)
        })
        .collect()
}

/// One row per grid point, evaluated in parallel and returned in grid order.
/// Failed points stay in the table as [`Cell::Failed`].
pub fn run_sweep(cfg: &ScenarioConfig, spec: &SweepSpec) -> Result<SweepTable> {
    cfg.validate()?;
    spec.validate()?;
    let columns = spec.columns();
    let rows = spec
        .grid
        .par_iter()
        .map(|&x| {
            let point = spec.parameter.apply(cfg, x);
            SweepRow {
                x,
                cells: evaluate_point(&point, &columns, spec.mc_samples, spec.seed, &spec.quadrature),
            }
        })
        .collect();
    Ok(SweepTable {
        parameter: spec.parameter,
        columns,
        rows,
    })
}

/// Marker written in place of the value and error of a failed point.
pub const FAILED_MARKER: &str = "FAILED";

pub fn to_csv(table: &SweepTable) -> String {
    let mut s = table.parameter.name();
    for (metric, method) in &table.columns {
        let col = format!("{}.{}", metric.name(), method.name());
        write!(s, ",{col},{col}.err").expect("writing to a String");
    }
    s.push('\n');
    for row in &table.rows {
        write!(s, "{:.16e}", row.x).expect("writing to a String");
        for cell in &row.cells {
            match cell {
                Cell::Value { value, uncertainty } => write!(s, ",{value:.16e},{uncertainty:.16e}"),
                Cell::Failed(_) => write!(s, ",{FAILED_MARKER},{FAILED_MARKER}"),
            }
            .expect("writing to a String");
        }
        s.push('\n');
    }
    s
}

pub fn emit_csv(table: &SweepTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_csv(table)).map_err(|e| Error::io(path, e))
}
