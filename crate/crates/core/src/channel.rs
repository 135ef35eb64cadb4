//! Scenario parameters, SINR laws and Rayleigh gain sampling.
//!
//! Every SINR in the system has the form `Z = a·X1/(b·X2 + 1)` with
//! independent exponential `X1`, `X2`. [`RatioDistribution`] holds that law
//! and is the single code path for the PU, eavesdropper and SU receivers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// The six fading links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Link {
    /// SU-Tx → SU-Rx
    G,
    /// PU-Tx → PU-Rx
    H,
    /// PU-Tx → EAV
    F,
    /// SU-Tx → PU-Rx (interference)
    Alpha,
    /// PU-Tx → SU-Rx (interference)
    Beta,
    /// SU-Tx → EAV (interference)
    Phi,
}

impl Link {
    pub const ALL: [Link; 6] = [Link::G, Link::H, Link::F, Link::Alpha, Link::Beta, Link::Phi];

    pub fn name(self) -> &'static str {
        match self {
            Link::G => "g",
            Link::H => "h",
            Link::F => "f",
            Link::Alpha => "alpha",
            Link::Beta => "beta",
            Link::Phi => "phi",
        }
    }

    pub fn from_name(name: &str) -> Option<Link> {
        Link::ALL.into_iter().find(|l| l.name() == name)
    }
}

/// Mean channel power gain `Ω` of every link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanGains {
    pub g: f64,
    pub h: f64,
    pub f: f64,
    pub alpha: f64,
    pub beta: f64,
    pub phi: f64,
}

impl MeanGains {
    pub fn uniform(omega: f64) -> Self {
        MeanGains {
            g: omega,
            h: omega,
            f: omega,
            alpha: omega,
            beta: omega,
            phi: omega,
        }
    }

    pub fn get(&self, link: Link) -> f64 {
        match link {
            Link::G => self.g,
            Link::H => self.h,
            Link::F => self.f,
            Link::Alpha => self.alpha,
            Link::Beta => self.beta,
            Link::Phi => self.phi,
        }
    }

    pub fn set(&mut self, link: Link, value: f64) {
        let slot = match link {
            Link::G => &mut self.g,
            Link::H => &mut self.h,
            Link::F => &mut self.f,
            Link::Alpha => &mut self.alpha,
            Link::Beta => &mut self.beta,
            Link::Phi => &mut self.phi,
        };
        *slot = value;
    }

    pub fn with(mut self, link: Link, value: f64) -> Self {
        self.set(link, value);
        self
    }
}

/// Full parameter set of one experiment. Powers are in watts, rates in bit/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioConfig {
    pub bandwidth_hz: f64,
    pub pu_power_w: f64,
    pub noise_w: f64,
    pub peak_power_w: f64,
    pub pu_rate_bps: f64,
    pub outage_threshold: f64,
    pub secrecy_rate_bps: f64,
    pub omega: MeanGains,
    /// SEP prefactor; `ε/2` is the error probability of an undetectable symbol.
    pub modulation_eps: f64,
    pub modulation_eta: f64,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("bandwidth_hz", self.bandwidth_hz),
            ("pu_power_w", self.pu_power_w),
            ("noise_w", self.noise_w),
            ("peak_power_w", self.peak_power_w),
            ("pu_rate_bps", self.pu_rate_bps),
            ("secrecy_rate_bps", self.secrecy_rate_bps),
            ("modulation_eps", self.modulation_eps),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        for link in Link::ALL {
            let v = self.omega.get(link);
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "omega.{} must be positive and finite, got {v}",
                    link.name()
                )));
            }
        }
        if !(self.outage_threshold > 0.0 && self.outage_threshold < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "outage_threshold must lie in (0, 1), got {}",
                self.outage_threshold
            )));
        }
        // ε/2 is the SEP of an unrecoverable symbol, so it must be a probability.
        if self.modulation_eps > 2.0 {
            return Err(Error::InvalidConfig(format!(
                "modulation_eps must lie in (0, 2], got {}",
                self.modulation_eps
            )));
        }
        if !(self.modulation_eta > 0.0 && self.modulation_eta <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "modulation_eta must lie in (0, 1], got {}",
                self.modulation_eta
            )));
        }
        Ok(())
    }

    /// `c = P_p/N0`.
    pub fn pu_snr(&self) -> f64 {
        self.pu_power_w / self.noise_w
    }

    /// `γ_max = P_pk/N0`.
    pub fn peak_snr(&self) -> f64 {
        self.peak_power_w / self.noise_w
    }

    /// SINR threshold of the PU rate target, `2^{r_p/B} - 1`.
    pub fn gamma_th(&self) -> f64 {
        (self.pu_rate_bps / self.bandwidth_hz).exp2() - 1.0
    }

    /// `ξ = 2^{R_s/B}`.
    pub fn xi(&self) -> f64 {
        (self.secrecy_rate_bps / self.bandwidth_hz).exp2()
    }
}

/// Law of `Z = a·X1/(b·X2 + 1)` with `X1 ~ Exp(mean Ω1)` and `X2 ~ Exp(mean Ω2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioDistribution {
    pub a: f64,
    pub b: f64,
    pub omega1: f64,
    pub omega2: f64,
}

impl RatioDistribution {
    pub fn new(a: f64, b: f64, omega1: f64, omega2: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite())
            || !(b >= 0.0 && b.is_finite())
            || !(omega1 > 0.0 && omega1.is_finite())
            || !(omega2 > 0.0 && omega2.is_finite())
        {
            return Err(Error::InvalidConfig(format!(
                "ratio law needs a > 0, b >= 0, Ω1 > 0, Ω2 > 0; got a={a}, b={b}, Ω1={omega1}, Ω2={omega2}"
            )));
        }
        Ok(RatioDistribution { a, b, omega1, omega2 })
    }

    /// Mean of the numerator, `a·Ω1`.
    pub fn scale(&self) -> f64 {
        self.a * self.omega1
    }

    /// `b·Ω2/(a·Ω1)`.
    pub fn slope(&self) -> f64 {
        self.b * self.omega2 / self.scale()
    }

    pub fn cdf(&self, z: f64) -> Result<f64> {
        if !(z >= 0.0) {
            return Err(Error::Domain {
                function: "RatioDistribution::cdf",
                arg: z,
            });
        }
        if z.is_infinite() {
            return Ok(1.0);
        }
        // 1 - e^{-u}/(1+kz) written as (kz - expm1(-u))/(1+kz)
        let kz = self.slope() * z;
        let u = z / self.scale();
        Ok((kz - (-u).exp_m1()) / (1.0 + kz))
    }

    /// Survival function `1 - cdf(z)`.
    pub fn sf(&self, z: f64) -> Result<f64> {
        if !(z >= 0.0) {
            return Err(Error::Domain {
                function: "RatioDistribution::sf",
                arg: z,
            });
        }
        Ok((-z / self.scale()).exp() / (1.0 + self.slope() * z))
    }

    pub fn pdf(&self, z: f64) -> Result<f64> {
        if !(z >= 0.0) {
            return Err(Error::Domain {
                function: "RatioDistribution::pdf",
                arg: z,
            });
        }
        let k = self.slope();
        let s = self.scale();
        let e = (-z / s).exp();
        let one_kz = 1.0 + k * z;
        Ok(k * e / (one_kz * one_kz) + e / (s * one_kz))
    }

    /// Maps one draw of `(X1, X2)` to `Z`.
    pub fn transform(&self, x1: f64, x2: f64) -> f64 {
        self.a * x1 / (self.b * x2 + 1.0)
    }
}

/// Laws of the three SINRs at a given SU transmit SNR `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinrLaws {
    /// `γ_P`: a = c, b = d, Ω_h, Ω_α
    pub pu: RatioDistribution,
    /// `γ_E`: a = c, b = d, Ω_f, Ω_φ
    pub eav: RatioDistribution,
    /// `γ_S`: a = d, b = c, Ω_g, Ω_β. `None` when `d = 0`: the SU SINR is
    /// then the point mass at zero and callers take the zero-power branch.
    pub su: Option<RatioDistribution>,
}

pub fn sinr_distributions(cfg: &ScenarioConfig, d: f64) -> Result<SinrLaws> {
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::Domain {
            function: "sinr_distributions",
            arg: d,
        });
    }
    let c = cfg.pu_snr();
    let om = &cfg.omega;
    Ok(SinrLaws {
        pu: RatioDistribution::new(c, d, om.h, om.alpha)?,
        eav: RatioDistribution::new(c, d, om.f, om.phi)?,
        su: if d > 0.0 {
            Some(RatioDistribution::new(d, c, om.g, om.beta)?)
        } else {
            None
        },
    })
}

/// Constants appearing in the closed-form metrics, all dimensionless.
///
/// With `c = P_p/N0` and `d = P_s/N0`:
///
/// ```text
/// A0 = dΩα/(cΩh)   B0 = cΩh   D0 = dΩφ/(cΩf)   E0 = cΩf
/// F0 = cΩβ/(dΩg)   G0 = dΩg   1/C0 = 1/B0 + 1/E0   1/F1 = 1/G0 + η
/// 1/B1 = ξ/B0 + 1/E0   A1 = exp(-(ξ-1)/B0)/(1 + A0(ξ-1))   D1 = A0ξ/(1 + A0(ξ-1))
/// ```
///
/// At `d = 0` the SU-dependent constants degenerate (`F0 = ∞`, `G0 = F1 = 0`,
/// `A0 = D0 = D1 = 0`); the evaluators branch on `d` before using them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    pub c: f64,
    pub d: f64,
    pub gamma_th: f64,
    pub xi: f64,
    pub a0: f64,
    pub b0: f64,
    pub c0: f64,
    pub d0: f64,
    pub e0: f64,
    pub f0: f64,
    pub g0: f64,
    pub f1: f64,
    pub a1: f64,
    pub b1: f64,
    pub d1: f64,
}

impl DerivedConstants {
    pub fn new(cfg: &ScenarioConfig, d: f64) -> Self {
        let c = cfg.pu_snr();
        let om = &cfg.omega;
        let xi = cfg.xi();
        let a0 = d * om.alpha / (c * om.h);
        let b0 = c * om.h;
        let d0 = d * om.phi / (c * om.f);
        let e0 = c * om.f;
        let f0 = c * om.beta / (d * om.g);
        let g0 = d * om.g;
        let c0 = 1.0 / (1.0 / b0 + 1.0 / e0);
        let f1 = 1.0 / (1.0 / g0 + cfg.modulation_eta);
        let b1 = 1.0 / (xi / b0 + 1.0 / e0);
        let denom = 1.0 + a0 * (xi - 1.0);
        let a1 = (-(xi - 1.0) / b0).exp() / denom;
        let d1 = a0 * xi / denom;
        DerivedConstants {
            c,
            d,
            gamma_th: cfg.gamma_th(),
            xi,
            a0,
            b0,
            c0,
            d0,
            e0,
            f0,
            g0,
            f1,
            a1,
            b1,
            d1,
        }
    }

    /// Constants at the SU power chosen by [`crate::policy::adaptive_power`].
    pub fn from_config(cfg: &ScenarioConfig) -> Self {
        let decision = crate::policy::adaptive_power(cfg);
        Self::new(cfg, decision.snr_d)
    }
}

/// One slot of channel power gains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainTuple {
    pub h: f64,
    pub alpha: f64,
    pub g: f64,
    pub beta: f64,
    pub f: f64,
    pub phi: f64,
}

/// Deterministic stream of block-fading gain tuples.
///
/// Each `(seed, stream)` pair selects an independent ChaCha8 stream, so
/// parallel workers can each own one and the union of their output does not
/// depend on scheduling.
#[derive(Debug, Clone)]
pub struct GainSampler {
    rng: ChaCha8Rng,
    omega: MeanGains,
}

impl GainSampler {
    pub fn new(cfg: &ScenarioConfig, seed: u64) -> Self {
        Self::with_stream(cfg, seed, 0)
    }

    pub fn with_stream(cfg: &ScenarioConfig, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        GainSampler { rng, omega: cfg.omega }
    }

    /// Access to the underlying generator for auxiliary draws (noise samples).
    pub fn rng_mut(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Inverse-CDF draw `-Ω·ln(1-U)`; `1-U` lies in `(0, 1]`.
    fn exponential(&mut self, mean: f64) -> f64 {
        let u: f64 = self.rng.random();
        -mean * (-u).ln_1p()
    }

    pub fn next_tuple(&mut self) -> GainTuple {
        let om = self.omega;
        GainTuple {
            h: self.exponential(om.h),
            alpha: self.exponential(om.alpha),
            g: self.exponential(om.g),
            beta: self.exponential(om.beta),
            f: self.exponential(om.f),
            phi: self.exponential(om.phi),
        }
    }
}

impl Iterator for GainSampler {
    type Item = GainTuple;

    fn next(&mut self) -> Option<GainTuple> {
        Some(self.next_tuple())
    }
}

/// The first `n` gain tuples of the stream selected by `seed`.
pub fn sample_gains(cfg: &ScenarioConfig, seed: u64, n: usize) -> impl Iterator<Item = GainTuple> {
    GainSampler::new(cfg, seed).take(n)
}
