//! Built-in scenarios for the figure-style sweeps over PU transmit SNR.
//!
//! Common to all presets: `B = 5 MHz`, `N0 = 1 W`, M-PSK constants
//! `ε = 2`, `η = sin²(π/M)`, and `R_s = r_p`. Gains that a scenario does not
//! pin are set to 4.

use crate::channel::{MeanGains, ScenarioConfig};
use crate::db_to_linear;
use crate::sweep::Metric;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub figure: u8,
    pub metric: Metric,
    pub summary: &'static str,
    /// Template; `pu_power_w` is overwritten by [`Preset::config_at`].
    pub config: ScenarioConfig,
}

impl Preset {
    /// The scenario at `P_p/N0 = pu_snr_db`.
    pub fn config_at(&self, pu_snr_db: f64) -> ScenarioConfig {
        ScenarioConfig {
            pu_power_w: self.config.noise_w * db_to_linear(pu_snr_db),
            ..self.config
        }
    }
}

/// `P_p/N0` grid of the figure sweeps: -5 to 20 dB in 1 dB steps.
pub fn figure_grid() -> Vec<f64> {
    (-5..=20).map(f64::from).collect()
}

/// Grid on which golden values are stored.
pub const GOLDEN_GRID_DB: [f64; 6] = [-5.0, 0.0, 5.0, 10.0, 15.0, 20.0];

struct Params {
    peak_snr_db: f64,
    rate_bps: f64,
    theta: f64,
    omega: MeanGains,
    eta: f64,
}

const BASE: Params = Params {
    peak_snr_db: 15.0,
    rate_bps: 32e3,
    theta: 0.01,
    omega: MeanGains {
        g: 4.0,
        h: 4.0,
        f: 4.0,
        alpha: 4.0,
        beta: 4.0,
        phi: 4.0,
    },
    eta: 1.0,
};

fn build(p: Params) -> ScenarioConfig {
    ScenarioConfig {
        bandwidth_hz: 5e6,
        pu_power_w: 1.0,
        noise_w: 1.0,
        peak_power_w: db_to_linear(p.peak_snr_db),
        pu_rate_bps: p.rate_bps,
        outage_threshold: p.theta,
        secrecy_rate_bps: p.rate_bps,
        omega: p.omega,
        modulation_eps: 2.0,
        modulation_eta: p.eta,
    }
}

fn gains(g: f64, h: f64, f: f64, alpha: f64, beta: f64, phi: f64) -> MeanGains {
    MeanGains {
        g,
        h,
        f,
        alpha,
        beta,
        phi,
    }
}

fn preset(name: &'static str, figure: u8, metric: Metric, summary: &'static str, p: Params) -> Preset {
    Preset {
        name,
        figure,
        metric,
        summary,
        config: build(p),
    }
}

pub fn all() -> Vec<Preset> {
    use Metric::{PEx, SecrecyOutage, Sep};
    let sep_gains = gains(4.0, 4.0, 4.0, 2.0, 2.0, 4.0);
    let qpsk = (std::f64::consts::PI / 4.0).sin().powi(2);
    let psk8 = (std::f64::consts::PI / 8.0).sin().powi(2);
    vec![
        preset(
            "case1",
            2,
            Sep,
            "peak 15 dB, r_p 32 kb/s, θ 0.01",
            Params {
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "case2",
            2,
            Sep,
            "peak 10 dB",
            Params {
                peak_snr_db: 10.0,
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "case3",
            2,
            Sep,
            "r_p 42 kb/s",
            Params {
                rate_bps: 42e3,
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "case4",
            2,
            Sep,
            "θ 0.03",
            Params {
                theta: 0.03,
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "case5",
            3,
            Sep,
            "Ω_α 0.5, Ω_β 2",
            Params {
                omega: gains(4.0, 4.0, 4.0, 0.5, 2.0, 4.0),
                ..BASE
            },
        ),
        preset(
            "case6",
            3,
            Sep,
            "Ω_α 2, Ω_β 0.5",
            Params {
                omega: gains(4.0, 4.0, 4.0, 2.0, 0.5, 4.0),
                ..BASE
            },
        ),
        preset(
            "case7",
            3,
            Sep,
            "Ω_α 2, Ω_β 2",
            Params {
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "case8",
            3,
            Sep,
            "Ω_h 6",
            Params {
                omega: gains(4.0, 6.0, 4.0, 2.0, 2.0, 4.0),
                ..BASE
            },
        ),
        preset(
            "fig4-bpsk",
            4,
            Sep,
            "M = 2",
            Params {
                omega: sep_gains,
                ..BASE
            },
        ),
        preset(
            "fig4-qpsk",
            4,
            Sep,
            "M = 4",
            Params {
                omega: sep_gains,
                eta: qpsk,
                ..BASE
            },
        ),
        preset(
            "fig4-8psk",
            4,
            Sep,
            "M = 8",
            Params {
                omega: sep_gains,
                eta: psk8,
                ..BASE
            },
        ),
        preset("fig5-phi4", 5, PEx, "Ω_φ 4", BASE),
        preset(
            "fig5-phi7",
            5,
            PEx,
            "Ω_φ 7",
            Params {
                omega: BASE.omega.with(crate::Link::Phi, 7.0),
                ..BASE
            },
        ),
        preset(
            "fig5-phi10",
            5,
            PEx,
            "Ω_φ 10",
            Params {
                omega: BASE.omega.with(crate::Link::Phi, 10.0),
                ..BASE
            },
        ),
        preset("fig6-phi4", 6, PEx, "Ω_φ 4, Ω_α 4", BASE),
        preset(
            "fig6-phi8",
            6,
            PEx,
            "Ω_φ 8, Ω_α 4",
            Params {
                omega: gains(4.0, 4.0, 4.0, 4.0, 4.0, 8.0),
                ..BASE
            },
        ),
        preset(
            "fig6-phi8-alpha2",
            6,
            PEx,
            "Ω_φ 8, Ω_α 2",
            Params {
                omega: gains(4.0, 4.0, 4.0, 2.0, 4.0, 8.0),
                ..BASE
            },
        ),
        preset(
            "case9",
            7,
            SecrecyOutage,
            "Ω_f = Ω_h = Ω_α = Ω_φ = 2",
            Params {
                omega: gains(4.0, 2.0, 2.0, 2.0, 4.0, 2.0),
                ..BASE
            },
        ),
        preset("case10", 7, SecrecyOutage, "Ω_f = Ω_h = Ω_α = Ω_φ = 4", BASE),
        preset(
            "case11",
            7,
            SecrecyOutage,
            "Ω_f = Ω_h = Ω_α = 4, Ω_φ 8",
            Params {
                omega: gains(4.0, 4.0, 4.0, 4.0, 4.0, 8.0),
                ..BASE
            },
        ),
        preset(
            "case12",
            7,
            SecrecyOutage,
            "Ω_f = Ω_h = Ω_α = 2, Ω_φ 8",
            Params {
                omega: gains(4.0, 2.0, 2.0, 2.0, 4.0, 8.0),
                ..BASE
            },
        ),
        preset(
            "fig8-h4",
            8,
            SecrecyOutage,
            "Ω_h 4, Ω_α 2",
            Params {
                omega: gains(4.0, 4.0, 4.0, 2.0, 4.0, 4.0),
                ..BASE
            },
        ),
        preset(
            "fig8-h8",
            8,
            SecrecyOutage,
            "Ω_h 8, Ω_α 2",
            Params {
                omega: gains(4.0, 8.0, 4.0, 2.0, 4.0, 4.0),
                ..BASE
            },
        ),
        preset(
            "fig8-alpha0.5",
            8,
            SecrecyOutage,
            "Ω_h 4, Ω_α 0.5",
            Params {
                omega: gains(4.0, 4.0, 4.0, 0.5, 4.0, 4.0),
                ..BASE
            },
        ),
    ]
}

pub fn find(name: &str) -> Option<Preset> {
    all().into_iter().find(|p| p.name == name)
}
