//! PU outage under SU interference and the SU adaptive transmit power.
//!
//! The SU knows only channel statistics (`Ω_h`, `Ω_α`, `P_p`, `N0`), so the
//! power is fixed for a whole run rather than adapted slot by slot.

use crate::channel::{RatioDistribution, ScenarioConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerDecision {
    pub power_w: f64,
    /// `d = P_s/N0`
    pub snr_d: f64,
    /// True iff the outage-saturating power strictly exceeds the peak.
    pub clamped_at_peak: bool,
    pub chi_plus: f64,
}

/// `Pr{γ_P < γ_th}` with the SU transmitting `ps` watts.
///
/// This is the ratio law of `γ_P` evaluated at `γ_th`.
pub fn pu_outage(cfg: &ScenarioConfig, ps: f64) -> f64 {
    assert!(
        ps >= 0.0 && ps.is_finite(),
        "SU power must be finite and nonnegative, got {ps}"
    );
    let law = RatioDistribution {
        a: cfg.pu_snr(),
        b: ps / cfg.noise_w,
        omega1: cfg.omega.h,
        omega2: cfg.omega.alpha,
    };
    law.cdf(cfg.gamma_th()).expect("γ_th is positive")
}

/// Largest SU power meeting the PU outage target, capped at the peak power.
pub fn adaptive_power(cfg: &ScenarioConfig) -> PowerDecision {
    let gamma_th = cfg.gamma_th();
    let pp_h = cfg.pu_power_w * cfg.omega.h;
    let x = cfg.noise_w * gamma_th / pp_h;
    // exp(-x)/(1-θ) - 1 evaluated as expm1 of the log so the sign is exact near 0
    let chi_plus = (-x - (-cfg.outage_threshold).ln_1p()).exp_m1().max(0.0);
    let unclamped = pp_h * chi_plus / (gamma_th * cfg.omega.alpha);
    let clamped_at_peak = unclamped > cfg.peak_power_w;
    let power_w = if clamped_at_peak { cfg.peak_power_w } else { unclamped };
    PowerDecision {
        power_w,
        snr_d: power_w / cfg.noise_w,
        clamped_at_peak,
        chi_plus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::MeanGains;
    use approx::assert_relative_eq;

    /// A config whose `γ_th` is exactly 1 (`r_p = B`).
    fn unit_config() -> ScenarioConfig {
        ScenarioConfig {
            bandwidth_hz: 1.0,
            pu_power_w: 1.0,
            noise_w: 1.0,
            peak_power_w: 10.0,
            pu_rate_bps: 1.0,
            outage_threshold: 0.01,
            secrecy_rate_bps: 1.0,
            omega: MeanGains::uniform(1.0),
            modulation_eps: 2.0,
            modulation_eta: 1.0,
        }
    }

    #[test]
    fn outage_examples() {
        let cfg = unit_config();
        assert_eq!(cfg.gamma_th(), 1.0);
        let e1 = (-1.0f64).exp();
        assert_relative_eq!(pu_outage(&cfg, 0.0), 1.0 - e1, max_relative = 1e-15);
        assert!((pu_outage(&cfg, 0.0) - 0.6321).abs() < 1e-4);
        assert_relative_eq!(pu_outage(&cfg, 1.0), 1.0 - 0.5 * e1, max_relative = 1e-15);
        assert!((pu_outage(&cfg, 1.0) - 0.8161).abs() < 1e-4);
    }

    #[test]
    fn zero_power_when_target_unreachable() {
        let cfg = unit_config();
        let p = adaptive_power(&cfg);
        assert_eq!(p.chi_plus, 0.0);
        assert_eq!(p.power_w, 0.0);
        assert!(!p.clamped_at_peak);
    }

    #[test]
    fn clamps_at_peak() {
        let mut cfg = unit_config();
        cfg.outage_threshold = 0.9999;
        let p = adaptive_power(&cfg);
        assert!(p.clamped_at_peak);
        assert_eq!(p.power_w, cfg.peak_power_w);
        assert_eq!(p.snr_d, 10.0);
    }

    #[test]
    fn tie_at_peak_is_not_clamped() {
        let mut cfg = unit_config();
        cfg.outage_threshold = 0.9;
        let unclamped = adaptive_power(&ScenarioConfig {
            peak_power_w: f64::MAX,
            ..cfg
        })
        .power_w;
        cfg.peak_power_w = unclamped;
        let p = adaptive_power(&cfg);
        assert!(!p.clamped_at_peak);
        assert_eq!(p.power_w, unclamped);
    }

    #[test]
    fn closed_loop_hits_threshold() {
        let mut cfg = unit_config();
        cfg.bandwidth_hz = 5e6;
        cfg.pu_rate_bps = 32e3;
        cfg.pu_power_w = 10.0;
        cfg.peak_power_w = 1e6;
        for theta in [0.005, 0.01, 0.03, 0.2] {
            cfg.outage_threshold = theta;
            let p = adaptive_power(&cfg);
            assert!(p.power_w > 0.0 && !p.clamped_at_peak);
            assert!((pu_outage(&cfg, p.power_w) - theta).abs() <= 1e-12);
        }
    }

    #[test]
    fn gamma_th_of_figure_rate() {
        let mut cfg = unit_config();
        cfg.bandwidth_hz = 5e6;
        cfg.pu_rate_bps = 32e3;
        assert!((cfg.gamma_th() - 0.004_445_9).abs() < 1e-7);
    }
}
