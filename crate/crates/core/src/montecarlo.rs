//! Slot-level Monte Carlo estimates of every metric, straight from the
//! event definitions.
//!
//! Work is split into fixed-size chunks. Chunk `k` draws from the ChaCha
//! stream `(seed, k)` and the per-chunk sums are reduced in chunk order, so
//! results are bit-identical for any number of worker threads.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::analytic::{sep_conditional, MetricResult};
use crate::channel::{GainSampler, RatioDistribution, ScenarioConfig};
use crate::error::{Error, Result};
use crate::policy::{adaptive_power, PowerDecision};

pub const MIN_SAMPLES: usize = 1000;

/// Slots per chunk; part of the reproducibility contract.
pub const CHUNK_SIZE: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub stderr: f64,
    pub n_samples: usize,
    pub seed: u64,
}

impl McEstimate {
    fn indicator(count: u64, n: usize, seed: u64) -> Self {
        let p = count as f64 / n as f64;
        McEstimate {
            value: p,
            stderr: (p * (1.0 - p) / n as f64).sqrt(),
            n_samples: n,
            seed,
        }
    }

    fn mean(sum: f64, sum_sq: f64, n: usize, seed: u64) -> Self {
        let nf = n as f64;
        let mean = sum / nf;
        let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
        McEstimate {
            value: mean,
            stderr: (var / nf).sqrt(),
            n_samples: n,
            seed,
        }
    }

    pub fn to_metric(self) -> MetricResult {
        MetricResult::monte_carlo(self.value, self.stderr)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McMetrics {
    pub pu_outage: McEstimate,
    /// Conditional-SEP average (Rao-Blackwellized over the symbol noise).
    pub sep: McEstimate,
    pub p_ex: McEstimate,
    pub secrecy_outage: McEstimate,
    pub power: PowerDecision,
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    pu_outage: u64,
    p_ex: u64,
    secrecy_outage: u64,
    sep_sum: f64,
    sep_sum_sq: f64,
}

fn chunk_lengths(n: usize) -> Vec<(u64, usize)> {
    (0..n.div_ceil(CHUNK_SIZE))
        .map(|k| (k as u64, CHUNK_SIZE.min(n - k * CHUNK_SIZE)))
        .collect()
}

fn check_samples(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: n,
        });
    }
    Ok(())
}

/// Estimates all metrics from `n` block-fading slots with the SU power fixed
/// by the statistics-based policy.
pub fn mc_metrics(cfg: &ScenarioConfig, n: usize, seed: u64) -> Result<McMetrics> {
    cfg.validate()?;
    check_samples(n)?;
    let power = adaptive_power(cfg);
    let c = cfg.pu_snr();
    let d = power.snr_d;
    let b = cfg.bandwidth_hz;
    let (rp, rs) = (cfg.pu_rate_bps, cfg.secrecy_rate_bps);
    let (eps, eta) = (cfg.modulation_eps, cfg.modulation_eta);

    let tallies: Vec<Tally> = chunk_lengths(n)
        .into_par_iter()
        .map(|(k, len)| {
            let mut sampler = GainSampler::with_stream(cfg, seed, k);
            let mut t = Tally::default();
            for _ in 0..len {
                let g = sampler.next_tuple();
                let gamma_p = c * g.h / (d * g.alpha + 1.0);
                let gamma_e = c * g.f / (d * g.phi + 1.0);
                let gamma_s = d * g.g / (c * g.beta + 1.0);
                let cap_p = b * gamma_p.ln_1p() / std::f64::consts::LN_2;
                let cap_e = b * gamma_e.ln_1p() / std::f64::consts::LN_2;
                if cap_p < rp {
                    t.pu_outage += 1;
                }
                let c_sec = if gamma_p > gamma_e {
                    t.p_ex += 1;
                    cap_p - cap_e
                } else {
                    0.0
                };
                if c_sec < rs {
                    t.secrecy_outage += 1;
                }
                let pe = sep_conditional(gamma_s, eps, eta);
                t.sep_sum += pe;
                t.sep_sum_sq += pe * pe;
            }
            t
        })
        .collect();

    let mut total = Tally::default();
    for t in &tallies {
        total.pu_outage += t.pu_outage;
        total.p_ex += t.p_ex;
        total.secrecy_outage += t.secrecy_outage;
        total.sep_sum += t.sep_sum;
        total.sep_sum_sq += t.sep_sum_sq;
    }
    Ok(McMetrics {
        pu_outage: McEstimate::indicator(total.pu_outage, n, seed),
        sep: McEstimate::mean(total.sep_sum, total.sep_sum_sq, n, seed),
        p_ex: McEstimate::indicator(total.p_ex, n, seed),
        secrecy_outage: McEstimate::indicator(total.secrecy_outage, n, seed),
        power,
    })
}

/// SEP by explicit symbol decisions: per slot a unit-variance Gaussian noise
/// sample `w` is drawn and an error counted when `√(2ηγ_S) + w < 0`. Each
/// error counts `ε`, matching `(ε/2)·erfc(√(ηγ))` in expectation.
pub fn mc_sep_symbol_level(cfg: &ScenarioConfig, n: usize, seed: u64) -> Result<McEstimate> {
    cfg.validate()?;
    check_samples(n)?;
    let c = cfg.pu_snr();
    let d = adaptive_power(cfg).snr_d;
    let eta = cfg.modulation_eta;
    let errors: u64 = chunk_lengths(n)
        .into_par_iter()
        .map(|(k, len)| {
            let mut sampler = GainSampler::with_stream(cfg, seed, k);
            let mut errors = 0u64;
            for _ in 0..len {
                let g = sampler.next_tuple();
                let gamma_s = d * g.g / (c * g.beta + 1.0);
                let w: f64 = sampler.rng_mut().sample(StandardNormal);
                if (2.0 * eta * gamma_s).sqrt() + w < 0.0 {
                    errors += 1;
                }
            }
            errors
        })
        .sum();
    let p = McEstimate::indicator(errors, n, seed);
    let eps = cfg.modulation_eps;
    Ok(McEstimate {
        value: eps * p.value,
        stderr: eps * p.stderr,
        ..p
    })
}

/// `n` draws of `Z = a·X1/(b·X2 + 1)`.
pub fn sample_ratio(law: &RatioDistribution, seed: u64, n: usize) -> Vec<f64> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let u1: f64 = rng.random();
            let u2: f64 = rng.random();
            let x1 = -law.omega1 * (-u1).ln_1p();
            let x2 = -law.omega2 * (-u2).ln_1p();
            law.transform(x1, x2)
        })
        .collect()
}

/// Two-sided Kolmogorov–Smirnov statistic of `samples` against `cdf`.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    samples.sort_by(f64::total_cmp);
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        d = d.max(f - i as f64 / n).max((i + 1) as f64 / n - f);
    }
    d
}
