//! Adaptive Gauss–Kronrod quadrature and the integral oracles built on it.
//!
//! The oracles integrate the defining probability integrals of each metric
//! using only the ratio-law CDFs and PDFs from [`crate::channel`]; they share
//! no code with [`crate::analytic`].

use crate::analytic::MetricResult;
use crate::channel::{sinr_distributions, DerivedConstants, ScenarioConfig};
use crate::error::{Error, Result};

/// Change of variables applied before integrating over `[0, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// No map; only valid for finite intervals.
    None,
    /// `y = L·t/(1-t)`, `t ∈ [0, 1)`.
    SemiInfiniteRational,
    /// `y = u²` followed by the rational map on `u`; removes a `1/√y`
    /// singularity at the origin.
    SqrtSingularity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub transform: Transform,
    /// Length scale `L` of the rational map.
    pub scale: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            transform: Transform::SemiInfiniteRational,
            scale: 1.0,
        }
    }
}

impl QuadratureSpec {
    pub fn with_transform(mut self, transform: Transform) -> Self {
        self.transform = transform;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::InvalidQuadrature("tolerances must be positive".into()));
        }
        if self.max_subdivisions < 10 {
            return Err(Error::InvalidQuadrature(format!(
                "max_subdivisions must be at least 10, got {}",
                self.max_subdivisions
            )));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::InvalidQuadrature(format!(
                "scale must be positive, got {}",
                self.scale
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

// 15-point Kronrod nodes on [-1, 1] (positive half, descending) and weights;
// odd-indexed nodes are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    if !resk.is_finite() {
        return Err(Error::InvalidQuadrature(format!("integrand not finite on [{a}, {b}]")));
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Panel { a, b, value, error })
}

/// Adaptive GK15 on a finite interval, bisecting the panel with the largest
/// error until the total error meets `max(abs_tol, rel_tol·|value|)`.
pub fn integrate_interval(f: impl Fn(f64) -> f64, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadratureEstimate> {
    spec.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidQuadrature(format!("interval [{a}, {b}] is not finite")));
    }
    let mut panels = vec![gk15(&f, a, b)?];
    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if error <= spec.abs_tol.max(spec.rel_tol * value.abs()) {
            return Ok(QuadratureEstimate {
                value,
                error_estimate: error,
                subdivisions: panels.len(),
            });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one panel");
        let p = panels[worst];
        let mid = 0.5 * (p.a + p.b);
        if panels.len() >= spec.max_subdivisions || !(mid > p.a && mid < p.b) {
            return Err(Error::NonConvergence {
                value,
                error_estimate: error,
                subdivisions: panels.len(),
            });
        }
        panels[worst] = gk15(&f, p.a, mid)?;
        panels.push(gk15(&f, mid, p.b)?);
    }
}

/// `∫₀^∞ f(y) dy` under the transform selected in `spec`.
pub fn integrate_semi_infinite(f: impl Fn(f64) -> f64, spec: &QuadratureSpec) -> Result<QuadratureEstimate> {
    spec.validate()?;
    let l = spec.scale;
    match spec.transform {
        Transform::None => Err(Error::InvalidQuadrature(
            "a semi-infinite range needs the rational or sqrt transform".into(),
        )),
        Transform::SemiInfiniteRational => integrate_interval(
            |t| {
                let one_t = 1.0 - t;
                let y = l * t / one_t;
                if y.is_finite() {
                    f(y) * l / (one_t * one_t)
                } else {
                    0.0
                }
            },
            0.0,
            1.0,
            spec,
        ),
        Transform::SqrtSingularity => integrate_interval(
            |t| {
                let one_t = 1.0 - t;
                let u = l * t / one_t;
                let y = u * u;
                if y.is_finite() {
                    2.0 * u * f(y) * l / (one_t * one_t)
                } else {
                    0.0
                }
            },
            0.0,
            1.0,
            spec,
        ),
    }
}

fn estimate_result(q: QuadratureEstimate) -> MetricResult {
    MetricResult::quadrature(q.value, q.error_estimate)
}

/// SEP from `(ε√η/(2√π))·∫₀^∞ F_γS(γ)·e^{-ηγ}/√γ dγ`.
///
/// At `d = 0` the SU SINR CDF is identically 1.
pub fn sep_oracle(cfg: &ScenarioConfig, consts: &DerivedConstants, spec: &QuadratureSpec) -> Result<MetricResult> {
    let eps = cfg.modulation_eps;
    let eta = cfg.modulation_eta;
    let laws = sinr_distributions(cfg, consts.d)?;
    let spec = spec
        .with_transform(Transform::SqrtSingularity)
        .with_scale(1.0 / eta.sqrt());
    let q = integrate_semi_infinite(
        |g| {
            let cdf = match laws.su {
                Some(law) => law.cdf(g).unwrap_or(1.0),
                None => 1.0,
            };
            cdf * (-eta * g).exp() / g.sqrt()
        },
        &spec,
    )?;
    let k = 0.5 * eps * (eta / std::f64::consts::PI).sqrt();
    Ok(MetricResult::quadrature(k * q.value, k * q.error_estimate))
}

/// `P_ex = ∫₀^∞ Pr{γ_P > y}·f_γE(y) dy`.
pub fn p_ex_oracle(cfg: &ScenarioConfig, consts: &DerivedConstants, spec: &QuadratureSpec) -> Result<MetricResult> {
    let laws = sinr_distributions(cfg, consts.d)?;
    let spec = spec
        .with_transform(Transform::SemiInfiniteRational)
        .with_scale(combined_scale(laws.pu.scale(), laws.eav.scale()));
    let q = integrate_semi_infinite(|y| laws.pu.sf(y).unwrap_or(0.0) * laws.eav.pdf(y).unwrap_or(0.0), &spec)?;
    Ok(estimate_result(q))
}

/// `P_out,sec = J1 + J2` with
/// `J1 = ∫₀^∞ [F_γP(ξ(1+y)-1) - F_γP(y)]·f_γE(y) dy` and `J2 = 1 - P_ex`.
pub fn secrecy_outage_oracle(
    cfg: &ScenarioConfig,
    consts: &DerivedConstants,
    spec: &QuadratureSpec,
) -> Result<MetricResult> {
    let laws = sinr_distributions(cfg, consts.d)?;
    let xi = cfg.xi();
    let spec = spec
        .with_transform(Transform::SemiInfiniteRational)
        .with_scale(combined_scale(laws.pu.scale(), laws.eav.scale()));
    let j1 = integrate_semi_infinite(
        |y| {
            let shifted = xi * (1.0 + y) - 1.0;
            let diff = laws.pu.cdf(shifted).unwrap_or(1.0) - laws.pu.cdf(y).unwrap_or(1.0);
            diff * laws.eav.pdf(y).unwrap_or(0.0)
        },
        &spec,
    )?;
    let pex = p_ex_oracle(cfg, consts, &spec)?;
    Ok(MetricResult::quadrature(
        j1.value + 1.0 - pex.value,
        j1.error_estimate + pex.uncertainty,
    ))
}

/// `∫₀^∞ F_γP(y)·f_γE(y) dy`, which equals `1 - P_ex`.
pub fn j12_oracle(
    cfg: &ScenarioConfig,
    consts: &DerivedConstants,
    spec: &QuadratureSpec,
) -> Result<QuadratureEstimate> {
    let laws = sinr_distributions(cfg, consts.d)?;
    let spec = spec
        .with_transform(Transform::SemiInfiniteRational)
        .with_scale(combined_scale(laws.pu.scale(), laws.eav.scale()));
    integrate_semi_infinite(
        |y| laws.pu.cdf(y).unwrap_or(1.0) * laws.eav.pdf(y).unwrap_or(0.0),
        &spec,
    )
}

/// PU outage `Pr{c·h < γ_th·(1 + d·α)}` integrated over the interference gain `α`.
pub fn pu_outage_oracle(cfg: &ScenarioConfig, ps: f64, spec: &QuadratureSpec) -> Result<MetricResult> {
    let c = cfg.pu_snr();
    let d = ps / cfg.noise_w;
    let gth = cfg.gamma_th();
    let (om_h, om_a) = (cfg.omega.h, cfg.omega.alpha);
    let spec = spec.with_transform(Transform::SemiInfiniteRational).with_scale(om_a);
    let q = integrate_semi_infinite(
        |a| {
            let p_h = -(-gth * (1.0 + d * a) / (c * om_h)).exp_m1();
            p_h * (-a / om_a).exp() / om_a
        },
        &spec,
    )?;
    Ok(estimate_result(q))
}

/// Map scale for a product of two ratio-law factors: the harmonic
/// combination of their exponential scales.
fn combined_scale(s1: f64, s2: f64) -> f64 {
    1.0 / (1.0 / s1 + 1.0 / s2)
}
