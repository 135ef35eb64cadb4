//! Closed-form SU SEP, PU probability of non-zero secrecy capacity, and PU
//! secrecy outage probability.
//!
//! Both secrecy metrics reduce to one kernel,
//!
//! ```text
//! pair(a, d, c, e) = ∫₀^∞ e^{-y/c}/(1+a·y) · [d/(1+d·y)² + 1/(e·(1+d·y))] dy
//! ```
//!
//! with `P_ex = pair(A0, D0, C0, E0)` and
//! `P_out,sec = 1 - A1·pair(D1, D0, B1, E0)`. The kernel has an
//! equal-constants form (`a = d`) and an unequal one whose partial-fraction
//! terms carry `(d-a)⁻²`. Near the switchover the unequal form is evaluated
//! by a convergent series in `q = (a-d)/a` instead of the partial fractions,
//! so no cancellation occurs anywhere in parameter space. See [`closed_form`].

use crate::channel::DerivedConstants;
use crate::specialfn::{erfc, erfcx};

/// How a metric value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Analytic,
    Quadrature,
    MonteCarlo,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Analytic, Method::Quadrature, Method::MonteCarlo];

    pub fn name(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Quadrature => "quadrature",
            Method::MonteCarlo => "monte_carlo",
        }
    }
}

/// Closed-form branch used for an analytic value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Metrics with one closed form for all `d > 0` (the SEP).
    SingleForm,
    EqualConstants,
    UnequalConstants,
    ZeroSuPower,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::SingleForm => "single_form",
            Branch::EqualConstants => "equal_constants",
            Branch::UnequalConstants => "unequal_constants",
            Branch::ZeroSuPower => "zero_su_power",
        }
    }
}

/// A metric value with its provenance.
///
/// `uncertainty` is 0 for analytic values, the absolute error estimate for
/// quadrature and the standard error for Monte Carlo. `branch` is set iff
/// `method` is [`Method::Analytic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricResult {
    pub value: f64,
    pub method: Method,
    pub uncertainty: f64,
    pub branch: Option<Branch>,
}

impl MetricResult {
    pub fn analytic(value: f64, branch: Branch) -> Self {
        MetricResult {
            value,
            method: Method::Analytic,
            uncertainty: 0.0,
            branch: Some(branch),
        }
    }

    pub fn quadrature(value: f64, error_estimate: f64) -> Self {
        MetricResult {
            value,
            method: Method::Quadrature,
            uncertainty: error_estimate,
            branch: None,
        }
    }

    pub fn monte_carlo(value: f64, stderr: f64) -> Self {
        MetricResult {
            value,
            method: Method::MonteCarlo,
            uncertainty: stderr,
            branch: None,
        }
    }
}

/// Symbol error probability given the SINR, `(ε/2)·erfc(√(η·γ))`.
pub fn sep_conditional(gamma: f64, eps: f64, eta: f64) -> f64 {
    0.5 * eps * erfc((eta * gamma).sqrt())
}

/// Average SU SEP.
///
/// `P_e = ε/2 - (ε/2)·√(ηπ/F0)·e^{x²}·erfc(x)` with `x = 1/√(F0·F1)`; the
/// product `e^{x²}·erfc(x)` is evaluated as `erfcx` so large `x` cannot
/// overflow. At `d = 0` every symbol is lost and the result is `ε/2`.
pub fn sep_analytic(consts: &DerivedConstants, eps: f64, eta: f64) -> MetricResult {
    if consts.d == 0.0 {
        return MetricResult::analytic(0.5 * eps, Branch::ZeroSuPower);
    }
    let f0 = consts.f0;
    let f1 = 1.0 / (1.0 / consts.g0 + eta);
    let x = 1.0 / (f0 * f1).sqrt();
    let h2 = 0.5 * eps * (eta * std::f64::consts::PI / f0).sqrt() * erfcx(x);
    MetricResult::analytic((0.5 * eps - h2).max(0.0), Branch::SingleForm)
}

/// Probability that the PU link has non-zero secrecy capacity, `Pr{γ_P > γ_E}`.
pub fn p_existence_analytic(consts: &DerivedConstants) -> MetricResult {
    if consts.d == 0.0 {
        return MetricResult::analytic(closed_form::p_existence_zero_power(consts), Branch::ZeroSuPower);
    }
    let (value, branch) = closed_form::pair(consts.a0, consts.d0, consts.c0, consts.e0);
    MetricResult::analytic(value.clamp(0.0, 1.0), branch)
}

/// `Pr{C_sec < R_s}` for the PU link.
pub fn secrecy_outage_analytic(consts: &DerivedConstants) -> MetricResult {
    if consts.d == 0.0 {
        return MetricResult::analytic(closed_form::secrecy_outage_zero_power(consts), Branch::ZeroSuPower);
    }
    let (kernel, branch) = closed_form::pair(consts.d1, consts.d0, consts.b1, consts.e0);
    MetricResult::analytic((1.0 - consts.a1 * kernel).clamp(0.0, 1.0), branch)
}

/// The individual closed forms behind the analytic metrics.
///
/// `φ(w) = e^w·Γ(0, w)` and `σ_m(w) = e^w·E_m(w)` throughout; all of them
/// come from [`crate::specialfn::exp_scaled_expint`], never from a product
/// of `exp` and `Γ`.
pub mod closed_form {
    use super::Branch;
    use crate::channel::DerivedConstants;
    use crate::specialfn::exp_scaled_expint;

    /// Relative gap `|a-d|/max(a,d)` at or below which the equal-constants
    /// form is used.
    pub const EQUAL_THRESHOLD: f64 = 1e-9;

    /// Relative gap below which the unequal form is summed as a series.
    pub const SERIES_THRESHOLD: f64 = 0.125;

    const SERIES_TERMS: usize = 64;

    pub fn relative_gap(a: f64, d: f64) -> f64 {
        let m = a.max(d);
        if m == 0.0 {
            0.0
        } else {
            (a - d).abs() / m
        }
    }

    /// The kernel with automatic branch selection; `a, d > 0`.
    pub fn pair(a: f64, d: f64, c: f64, e: f64) -> (f64, Branch) {
        let r = relative_gap(a, d);
        if r <= EQUAL_THRESHOLD {
            (pair_equal(d, c, e), Branch::EqualConstants)
        } else {
            (pair_unequal(a, d, c, e), Branch::UnequalConstants)
        }
    }

    /// Equal-constants kernel `pair(d, d, c, e)`, i.e. with `w = 1/(c·d)`
    ///
    /// ```text
    /// (cd-1)/(2cd) + 1/(de) + w²φ(w)/2 - φ(w)/(c·d²·e)  =  σ₂(w)/(d·e) + σ₃(w).
    /// ```
    ///
    /// The right-hand side is what is evaluated; it has no cancellation
    /// when `w` is large.
    pub fn pair_equal(d: f64, c: f64, e: f64) -> f64 {
        let w = 1.0 / (c * d);
        let s = exp_scaled_expint(w, 3).expect("w is positive");
        s[1] / (d * e) + s[2]
    }

    /// The equal-constants kernel written out term by term.
    pub fn pair_equal_literal(d: f64, c: f64, e: f64) -> f64 {
        let cd = c * d;
        let phi = exp_scaled_expint(1.0 / cd, 1).expect("w is positive")[0];
        (cd - 1.0) / (2.0 * cd) + 1.0 / (d * e) + phi / (2.0 * cd * cd) - phi / (c * d * d * e)
    }

    /// Unequal-constants kernel: series near `a = d`, partial fractions otherwise.
    pub fn pair_unequal(a: f64, d: f64, c: f64, e: f64) -> f64 {
        if relative_gap(a, d) <= SERIES_THRESHOLD {
            pair_series(a, d, c, e)
        } else {
            pair_direct(a, d, c, e)
        }
    }

    /// Partial-fraction form
    ///
    /// ```text
    /// ad/(d-a)²·(φ_a - φ_d) + d/(d-a) - φ_d/(c(d-a)) + (φ_a - φ_d)/(e(a-d))
    /// ```
    ///
    /// with `φ_k = φ(1/(k·c))`. Loses about `ε/(Δ²)` absolute accuracy for
    /// relative gap `Δ`, so it is only used away from `a = d`.
    pub fn pair_direct(a: f64, d: f64, c: f64, e: f64) -> f64 {
        let phi_a = exp_scaled_expint(1.0 / (a * c), 1).expect("positive")[0];
        let phi_d = exp_scaled_expint(1.0 / (d * c), 1).expect("positive")[0];
        let diff = phi_a - phi_d;
        let dm = d - a;
        let i11_i13 = a * d / (dm * dm) * diff;
        let i12 = d / dm - phi_d / (c * dm);
        let i21_i22 = diff / (e * (a - d));
        i11_i13 + i12 + i21_i22
    }

    /// Series form, valid for `|a-d| < a`:
    ///
    /// ```text
    /// (1-q)·Σ_{n≥0} σ_{n+3} qⁿ + (1/(a·e))·Σ_{n≥0} σ_{n+2} qⁿ,   q = (a-d)/a,  w = 1/(c·d)
    /// ```
    pub fn pair_series(a: f64, d: f64, c: f64, e: f64) -> f64 {
        let q = (a - d) / a;
        debug_assert!(q.abs() < 0.5);
        let w = 1.0 / (c * d);
        let s = exp_scaled_expint(w, SERIES_TERMS + 3).expect("w is positive");
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        let mut qn = 1.0;
        for n in 0..SERIES_TERMS {
            s1 += s[n + 1] * qn;
            s2 += s[n + 2] * qn;
            qn *= q;
            if qn.abs() < 1e-18 {
                break;
            }
        }
        (1.0 - q) * s2 + s1 / (a * e)
    }

    /// `P_ex` at `d = 0`: two interference-free exponentials, `Ω_h/(Ω_h+Ω_f)`.
    pub fn p_existence_zero_power(consts: &DerivedConstants) -> f64 {
        consts.b0 / (consts.b0 + consts.e0)
    }

    /// `P_out,sec` at `d = 0`: `1 - e^{-(ξ-1)/B0}·B0/(B0 + ξ·E0)`.
    pub fn secrecy_outage_zero_power(consts: &DerivedConstants) -> f64 {
        let b0 = consts.b0;
        1.0 - (-(consts.xi - 1.0) / b0).exp() * b0 / (b0 + consts.xi * consts.e0)
    }

    pub fn p_existence_equal(k: &DerivedConstants) -> f64 {
        pair_equal(k.d0, k.c0, k.e0)
    }

    pub fn p_existence_unequal(k: &DerivedConstants) -> f64 {
        pair_unequal(k.a0, k.d0, k.c0, k.e0)
    }

    pub fn p_existence_unequal_direct(k: &DerivedConstants) -> f64 {
        pair_direct(k.a0, k.d0, k.c0, k.e0)
    }

    pub fn secrecy_outage_equal(k: &DerivedConstants) -> f64 {
        1.0 - k.a1 * pair_equal(k.d0, k.b1, k.e0)
    }

    pub fn secrecy_outage_unequal(k: &DerivedConstants) -> f64 {
        1.0 - k.a1 * pair_unequal(k.d1, k.d0, k.b1, k.e0)
    }

    pub fn secrecy_outage_unequal_direct(k: &DerivedConstants) -> f64 {
        1.0 - k.a1 * pair_direct(k.d1, k.d0, k.b1, k.e0)
    }
}
