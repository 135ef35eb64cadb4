//! Error function and exponential integrals.
//!
//! The closed-form metrics are built from `erf`/`erfc`, the incomplete gamma
//! function of order zero `Γ(0,z) = E1(z) = -Ei(-z)` and products of the form
//! `exp(z)·Γ(0,z)`. The latter are never formed from the two factors: for a
//! weak SU transmitter the argument easily exceeds 700 and the naive product
//! becomes `inf·0`. [`exp_scaled_gamma0`] and [`exp_scaled_expint`] return
//! the scaled value directly.
//!
//! Naming note: the closed-form SEP expression writes the error function as a
//! calligraphic `Q`. It is the error function `(2/√π)∫₀ᶻ e^{-t²} dt`, not the
//! Gaussian tail function.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant, 20 digits.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.57721566490153286060;

const SQRT_PI: f64 = 1.772_453_850_905_516;

// Rational approximations below are the SunPro fdlibm `s_erf.c` coefficients.
const ERX: f64 = 8.45062911510467529297e-01;
const EFX8: f64 = 1.02703333676410069053e+00;
const PP: [f64; 5] = [
    1.28379167095512558561e-01,
    -3.25042107247001499370e-01,
    -2.84817495755985104766e-02,
    -5.77027029648944159157e-03,
    -2.37630166566501626084e-05,
];
const QQ: [f64; 5] = [
    3.97917223959155352819e-01,
    6.50222499887672944485e-02,
    5.08130628187576562776e-03,
    1.32494738004321644526e-04,
    -3.96022827877536812320e-06,
];
const PA: [f64; 7] = [
    -2.36211856075265944077e-03,
    4.14856118683748331666e-01,
    -3.72207876035701323847e-01,
    3.18346619901161753674e-01,
    -1.10894694282396677476e-01,
    3.54783043256182359371e-02,
    -2.16637559486879084300e-03,
];
const QA: [f64; 6] = [
    1.06420880400844228286e-01,
    5.40397917702171048937e-01,
    7.18286544141962662868e-02,
    1.26171219808761642112e-01,
    1.36370839120290507362e-02,
    1.19844998467991074170e-02,
];
const RA: [f64; 8] = [
    -9.86494403484714822705e-03,
    -6.93858572707181764372e-01,
    -1.05586262253232909814e+01,
    -6.23753324503260060396e+01,
    -1.62396669462573470355e+02,
    -1.84605092906711035994e+02,
    -8.12874355063065934246e+01,
    -9.81432934416914548592e+00,
];
const SA: [f64; 8] = [
    1.96512716674392571292e+01,
    1.37657754143519042600e+02,
    4.34565877475229228821e+02,
    6.45387271733267880336e+02,
    4.29008140027567833386e+02,
    1.08635005541779435134e+02,
    6.57024977031928170135e+00,
    -6.04244152148580987438e-02,
];
const RB: [f64; 7] = [
    -9.86494292470009928597e-03,
    -7.99283237680523006574e-01,
    -1.77579549177547519889e+01,
    -1.60636384855821916062e+02,
    -6.37566443368389627722e+02,
    -1.02509513161107724954e+03,
    -4.83519191608651397019e+02,
];
const SB: [f64; 7] = [
    3.03380607434824582924e+01,
    3.25792512996573918826e+02,
    1.53672958608443695994e+03,
    3.19985821950859553908e+03,
    2.55305040643316442583e+03,
    4.74528541206955367215e+02,
    -2.24409524465858183362e+01,
];

/// Horner evaluation of `c[0] + c[1] t + c[2] t² + …`.
fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * t + ci)
}

/// `erf(x) - x` relative correction on `|x| < 0.84375`.
fn small_ratio(x: f64) -> f64 {
    let z = x * x;
    horner(&PP, z) / (1.0 + z * horner(&QQ, z))
}

/// `erf(1+s) - ERX` on `0.84375 <= |x| < 1.25`.
fn near_one(ax: f64) -> f64 {
    let s = ax - 1.0;
    horner(&PA, s) / (1.0 + s * horner(&QA, s))
}

/// `ln(x·erfc(x)) + x² + 0.5625` for `1.25 <= x < 28`.
fn tail_exponent(x: f64) -> f64 {
    let s = 1.0 / (x * x);
    if x < 1.0 / 0.35 {
        horner(&RA, s) / (1.0 + s * horner(&SA, s))
    } else {
        horner(&RB, s) / (1.0 + s * horner(&SB, s))
    }
}

/// `erfc(x)` for `x >= 1.25`, with `exp(-x²)` split so the leading factor is exact.
fn erfc_tail(x: f64) -> f64 {
    if x >= 28.0 {
        return 0.0;
    }
    let z = f64::from_bits(x.to_bits() & 0xffff_ffff_0000_0000);
    (-z * z - 0.5625).exp() * ((z - x) * (z + x) + tail_exponent(x)).exp() / x
}

/// Error function `(2/√π)∫₀ˣ e^{-t²} dt`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax < 0.84375 {
        if ax < 3.725_290_298_461_914e-9 {
            return 0.125 * (8.0 * x + EFX8 * x);
        }
        return x + x * small_ratio(x);
    }
    let y = if ax < 1.25 {
        ERX + near_one(ax)
    } else if ax < 6.0 {
        1.0 - erfc_tail(ax)
    } else {
        1.0
    };
    y.copysign(x)
}

/// Complementary error function `1 - erf(x)`, accurate in the upper tail.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax < 0.84375 {
        let y = small_ratio(x);
        if x < 0.25 {
            return 1.0 - (x + x * y);
        }
        return 0.5 - (x - 0.5 + x * y);
    }
    let tail = if ax < 1.25 {
        1.0 - ERX - near_one(ax)
    } else {
        erfc_tail(ax)
    };
    if x > 0.0 {
        tail
    } else {
        2.0 - tail
    }
}

/// Scaled complementary error function `exp(x²)·erfc(x)`.
///
/// Finite for every `x >= 0` (it decays like `1/(x√π)`); for negative `x`
/// it grows like `2·exp(x²)` and overflows below about `-26.6`.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 2.0 * (x * x).exp() - erfcx(-x);
    }
    if x < 1.25 {
        return (x * x).exp() * erfc(x);
    }
    if x < 28.0 {
        // exp(-x²) cancels exactly against the exp(x²) scaling.
        return (tail_exponent(x) - 0.5625).exp() / x;
    }
    // Asymptotic series 1 - 1/(2x²) + 3/(2x²)² - …; terms shrink by
    // (2k-1)/(2x²) < 1/100 here.
    let two_x2 = 2.0 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..20 {
        term *= -((2 * k - 1) as f64) / two_x2;
        sum += term;
        if term.abs() < 1e-17 {
            break;
        }
    }
    sum / (x * SQRT_PI)
}

const FPMIN: f64 = 1e-300;
const CF_EPS: f64 = 1e-16;
const CF_MAX_ITER: usize = 10_000;

/// `exp(z)·E_n(z)` for `z >= 1` by the modified Lentz continued fraction.
fn scaled_expint_cf(n: u32, z: f64) -> f64 {
    let nm1 = f64::from(n) - 1.0;
    let mut b = z + f64::from(n);
    let mut c = 1.0 / FPMIN;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..CF_MAX_ITER {
        let i = i as f64;
        let an = -i * (nm1 + i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < CF_EPS {
            break;
        }
    }
    h
}

/// `E1(z)` for `0 < z < 1` from the power series
/// `-γ - ln z - Σ (-z)ⁿ/(n·n!)`.
fn gamma0_series(z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 1..200 {
        let n = n as f64;
        term *= -z / n;
        let contrib = term / n;
        sum += contrib;
        if contrib.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    -EULER_GAMMA - z.ln() - sum
}

fn check_positive(function: &'static str, z: f64) -> Result<()> {
    if z > 0.0 {
        Ok(())
    } else {
        // also rejects NaN
        Err(Error::Domain { function, arg: z })
    }
}

/// Incomplete gamma of order zero, `Γ(0,z) = E1(z) = ∫_z^∞ e^{-t}/t dt`.
///
/// Power series below `z = 1`, continued fraction above. Underflows to zero
/// past `z ≈ 745`.
pub fn expint_gamma0(z: f64) -> Result<f64> {
    check_positive("expint_gamma0", z)?;
    if z < 1.0 {
        Ok(gamma0_series(z))
    } else if z.is_infinite() {
        Ok(0.0)
    } else {
        Ok((-z).exp() * scaled_expint_cf(1, z))
    }
}

/// Exponential integral `Ei(x)` for negative arguments only.
pub fn expint_ei(x: f64) -> Result<f64> {
    if !(x < 0.0) {
        return Err(Error::Domain {
            function: "expint_ei",
            arg: x,
        });
    }
    Ok(-expint_gamma0(-x)?)
}

/// Result of [`exp_scaled_gamma0`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledE1Value {
    pub value: f64,
    /// Always `true`: `value` holds `exp(z)·Γ(0,z)`, not `Γ(0,z)`.
    pub is_scaled: bool,
}

/// `exp(z)·Γ(0,z)` evaluated without forming `exp(z)`.
///
/// For `z >= 1` the value lies strictly between `1/(z+1)` and `1/z`.
pub fn exp_scaled_gamma0(z: f64) -> Result<ScaledE1Value> {
    check_positive("exp_scaled_gamma0", z)?;
    let value = if z < 1.0 {
        z.exp() * gamma0_series(z)
    } else if z.is_infinite() {
        0.0
    } else {
        scaled_expint_cf(1, z)
    };
    Ok(ScaledE1Value { value, is_scaled: true })
}

/// Scaled generalized exponential integrals `exp(z)·E_m(z)` for
/// `m = 1..=count`, returned in order.
///
/// For `z < 1` the sequence comes from the stable forward recurrence
/// `σ_{m+1} = (1 - z σ_m)/m`; above, each order has its own continued
/// fraction.
pub fn exp_scaled_expint(z: f64, count: usize) -> Result<Vec<f64>> {
    check_positive("exp_scaled_expint", z)?;
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    if z < 1.0 {
        let mut sigma = z.exp() * gamma0_series(z);
        out.push(sigma);
        for m in 1..count {
            sigma = (1.0 - z * sigma) / m as f64;
            out.push(sigma);
        }
    } else if z.is_infinite() {
        out.resize(count, 0.0);
    } else {
        for m in 1..=count {
            out.push(scaled_expint_cf(m as u32, z));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Composite Gauss–Legendre (10 points per panel) on [a, b]; test-only
    /// reference that shares nothing with the rational approximations.
    fn gauss_legendre(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
        const X: [f64; 5] = [
            0.148_874_338_981_631_2,
            0.433_395_394_129_247_2,
            0.679_409_568_299_024_4,
            0.865_063_366_688_984_5,
            0.973_906_528_517_171_7,
        ];
        const W: [f64; 5] = [
            0.295_524_224_714_752_9,
            0.269_266_719_309_996_4,
            0.219_086_362_515_982_04,
            0.149_451_349_150_580_6,
            0.066_671_344_308_688_14,
        ];
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let mid = a + (p as f64 + 0.5) * h;
            let half = 0.5 * h;
            let mut s = 0.0;
            for (x, w) in X.iter().zip(W.iter()) {
                s += w * (f(mid - half * x) + f(mid + half * x));
            }
            total += s * half;
        }
        total
    }

    #[test]
    fn erf_fixed_points() {
        assert_eq!(erf(0.0), 0.0);
        assert!((erf(6.0) - 1.0).abs() <= 1e-14);
        assert_eq!(erf(f64::INFINITY), 1.0);
        assert_eq!(erf(f64::NEG_INFINITY), -1.0);
        assert!((erf(1.0) - 0.842_700_792_949_714_9).abs() <= 1e-15);
    }

    #[test]
    fn erf_matches_quadrature_at_probe_points() {
        let kernel = |t: f64| 2.0 / SQRT_PI * (-t * t).exp();
        for i in 1..=64 {
            let x = i as f64 * 5.0 / 64.0;
            let reference = gauss_legendre(kernel, 0.0, x, 64);
            assert!(
                (erf(x) - reference).abs() <= 1e-14,
                "x = {x}: {} vs {reference}",
                erf(x)
            );
            assert_eq!(erf(-x), -erf(x));
        }
    }

    #[test]
    fn erfc_and_erfcx_agree_with_definitions() {
        for i in 0..200 {
            let x = -3.0 + i as f64 * 0.05;
            assert!((erfc(x) - (1.0 - erf(x))).abs() < 2e-16 * 4.0);
            if x < 5.0 {
                assert_relative_eq!(erfcx(x), (x * x).exp() * erfc(x), max_relative = 1e-14);
            }
        }
        // erfc(1) = 0.157299207050285130658...
        assert_relative_eq!(erfc(1.0), 0.157_299_207_050_285_13, max_relative = 1e-15);
        // Large-argument branch against its leading asymptotics.
        for &x in &[30.0, 100.0, 1e4, 1e8] {
            assert_relative_eq!(erfcx(x) * x * SQRT_PI, 1.0 - 0.5 / (x * x), max_relative = 1e-6);
        }
        // Continuity across the 28 switch.
        assert_relative_eq!(erfcx(28.0 - 1e-12), erfcx(28.0), max_relative = 1e-13);
    }

    #[test]
    fn gamma0_reference_values() {
        assert_relative_eq!(
            expint_gamma0(1.0).unwrap(),
            0.219_383_934_395_520_27,
            max_relative = 1e-14
        );
        let z: f64 = 1e-8;
        let series = -EULER_GAMMA - z.ln() + z - z * z / 4.0;
        assert_relative_eq!(expint_gamma0(z).unwrap(), series, max_relative = 1e-15);
        assert!((expint_gamma0(z).unwrap() - 17.843_465_089_050_8).abs() < 1e-12);
        // E1(0.5) = 0.5597735947761608, E1(2) = 0.04890051070806112
        assert_relative_eq!(
            expint_gamma0(0.5).unwrap(),
            0.559_773_594_776_160_8,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            expint_gamma0(2.0).unwrap(),
            0.048_900_510_708_061_12,
            max_relative = 1e-14
        );
    }

    #[test]
    fn gamma0_by_quadrature() {
        // ∫_z^∞ e^{-t}/t dt with t = z + u and u from 0 to 60.
        for &z in &[0.3, 1.0, 4.0] {
            let reference = gauss_legendre(|u| (-(z + u)).exp() / (z + u), 0.0, 60.0, 400);
            assert_relative_eq!(expint_gamma0(z).unwrap(), reference, max_relative = 1e-12);
        }
    }

    #[test]
    fn gamma0_crossover_is_continuous() {
        let below = gamma0_series(1.0 - 1e-12);
        let above = expint_gamma0(1.0).unwrap();
        assert_relative_eq!(below, above, max_relative = 1e-11);
        assert_relative_eq!(gamma0_series(1.0), above, max_relative = 1e-14);
    }

    #[test]
    fn gamma0_domain_errors() {
        assert!(expint_gamma0(0.0).is_err());
        assert!(expint_gamma0(-1.0).is_err());
        assert!(expint_gamma0(f64::NAN).is_err());
        assert!(expint_ei(0.0).is_err());
        assert!(expint_ei(2.0).is_err());
        assert!(exp_scaled_gamma0(0.0).is_err());
    }

    #[test]
    fn ei_is_negated_gamma0() {
        assert_relative_eq!(
            expint_ei(-1.0).unwrap(),
            -0.219_383_934_395_520_27,
            max_relative = 1e-14
        );
        assert!((expint_ei(-1e-8).unwrap() + 17.843_465_089_050_8).abs() < 1e-12);
        assert!(expint_ei(-800.0).unwrap() <= 0.0);
        for k in -8..=3 {
            let z = 10f64.powi(k);
            let g = expint_gamma0(z).unwrap();
            assert!((g + expint_ei(-z).unwrap()).abs() <= 1e-12 * g.abs());
        }
    }

    #[test]
    fn scaled_gamma0_values() {
        assert_relative_eq!(
            exp_scaled_gamma0(1.0).unwrap().value,
            0.596_347_362_323_194_1,
            max_relative = 1e-14
        );
        let big = exp_scaled_gamma0(1000.0).unwrap().value;
        assert!(big > 1.0 / 1001.0 && big < 1.0 / 1000.0);
        let small = exp_scaled_gamma0(1e-6).unwrap().value;
        assert!((small - 13.2383).abs() < 1e-3);
        assert!(exp_scaled_gamma0(1e300).unwrap().value > 0.0);
        for &z in &[1e-3f64, 0.5, 2.0, 30.0, 300.0] {
            let naive = z.exp() * expint_gamma0(z).unwrap();
            assert_relative_eq!(exp_scaled_gamma0(z).unwrap().value, naive, max_relative = 1e-10);
        }
    }

    #[test]
    fn gamma0_derivative() {
        for &z in &[0.1, 1.0, 10.0] {
            let h = 1e-5 * z;
            let fd = (expint_gamma0(z + h).unwrap() - expint_gamma0(z - h).unwrap()) / (2.0 * h);
            let exact = -(-z).exp() / z;
            assert_relative_eq!(fd, exact, max_relative = 1e-6);
        }
    }

    #[test]
    fn generalized_expint_recurrences() {
        // E_{m+1}(z) = (e^{-z} - z E_m(z))/m in scaled form, on both
        // sides of the z = 1 switch.
        for &z in &[0.01, 0.7, 1.0, 3.0, 50.0, 5e4] {
            let s = exp_scaled_expint(z, 12).unwrap();
            assert_relative_eq!(s[0], exp_scaled_gamma0(z).unwrap().value, max_relative = 1e-14);
            for m in 1..12 {
                let rec = (1.0 - z * s[m - 1]) / m as f64;
                // the recurrence itself loses digits for large z, so only
                // compare where it is well conditioned
                if z < 5.0 {
                    assert_relative_eq!(s[m], rec, max_relative = 1e-12);
                }
                assert!(s[m] < s[m - 1]);
                assert!(s[m] < 1.0 / (z + m as f64 - 1.0 + 1e-300));
            }
        }
        // scaled E2(1) = e·E2(1), E2(1) = 0.14849550677592205
        let s = exp_scaled_expint(1.0, 2).unwrap();
        assert_relative_eq!(
            s[1],
            std::f64::consts::E * 0.148_495_506_775_922_05,
            max_relative = 1e-13
        );
    }
}
