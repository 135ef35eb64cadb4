//! Frozen reference values and oracle self-consistency.
//!
//! The frozen numbers come from a 30-digit evaluation of the defining
//! integrals (mpmath), independent of this crate.

use underlay_secrecy::analytic::{p_existence_analytic, secrecy_outage_analytic, sep_analytic, Branch};
use underlay_secrecy::montecarlo::{mc_metrics, mc_sep_symbol_level};
use underlay_secrecy::policy::adaptive_power;
use underlay_secrecy::quadrature::{
    integrate_semi_infinite, j12_oracle, p_ex_oracle, secrecy_outage_oracle, sep_oracle, QuadratureSpec, Transform,
};
use underlay_secrecy::{golden, presets, DerivedConstants, MeanGains, ScenarioConfig};

struct Reference {
    preset: &'static str,
    pu_snr_db: f64,
    snr_d: f64,
    sep: f64,
    p_ex: f64,
    secrecy_outage: f64,
}

const REFERENCES: [Reference; 4] = [
    Reference {
        preset: "case1",
        pu_snr_db: 8.0,
        snr_d: 28.164_863_333_428_314,
        sep: 0.052_350_306_719_296_189,
        p_ex: 0.612_328_223_559_133_07,
        secrecy_outage: 0.392_981_679_184_267_9,
    },
    Reference {
        preset: "fig5-phi7",
        pu_snr_db: 10.0,
        snr_d: 22.466_829_166_616_84,
        sep: 0.148_761_347_003_432_41,
        p_ex: 0.591_548_311_615_430_95,
        secrecy_outage: 0.413_515_380_504_634_11,
    },
    Reference {
        preset: "case9",
        pu_snr_db: 10.0,
        snr_d: 22.214_346_012_688_81,
        sep: 0.149_937_549_075_644_44,
        p_ex: 0.5,
        secrecy_outage: 0.504_173_304_035_700_5,
    },
    Reference {
        preset: "fig4-8psk",
        pu_snr_db: 0.0,
        snr_d: 4.039_098_149_680_828,
        sep: 0.309_491_694_333_297_54,
        p_ex: 0.605_122_121_126_749_23,
        secrecy_outage: 0.400_443_269_508_994_6,
    },
];

#[test]
fn frozen_values() {
    let spec = QuadratureSpec::default();
    for r in &REFERENCES {
        let cfg = presets::find(r.preset).unwrap().config_at(r.pu_snr_db);
        let d = adaptive_power(&cfg).snr_d;
        assert!((d - r.snr_d).abs() < 1e-12 * r.snr_d, "{}: d = {d}", r.preset);
        let k = DerivedConstants::from_config(&cfg);
        let pairs = [
            (
                sep_analytic(&k, cfg.modulation_eps, cfg.modulation_eta).value,
                sep_oracle(&cfg, &k, &spec).unwrap().value,
                r.sep,
            ),
            (
                p_existence_analytic(&k).value,
                p_ex_oracle(&cfg, &k, &spec).unwrap().value,
                r.p_ex,
            ),
            (
                secrecy_outage_analytic(&k).value,
                secrecy_outage_oracle(&cfg, &k, &spec).unwrap().value,
                r.secrecy_outage,
            ),
        ];
        for (analytic, quad, frozen) in pairs {
            assert!(
                (analytic - frozen).abs() < 1e-12,
                "{}: analytic {analytic} vs {frozen}",
                r.preset
            );
            assert!(
                (quad - frozen).abs() < 1e-12,
                "{}: quadrature {quad} vs {frozen}",
                r.preset
            );
        }
    }
}

#[test]
fn integrator_anchors() {
    let spec = QuadratureSpec::default();
    let one = integrate_semi_infinite(|t| (-t).exp(), &spec).unwrap();
    assert!((one.value - 1.0).abs() < 1e-12);
    let root_pi = integrate_semi_infinite(
        |g| (-g).exp() / g.sqrt(),
        &spec.with_transform(Transform::SqrtSingularity),
    )
    .unwrap();
    assert!((root_pi.value - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    let e_gamma = integrate_semi_infinite(|t| (-t).exp() / (1.0 + t), &spec).unwrap();
    assert!((e_gamma.value - 0.596_347_362_323_194_07).abs() < 1e-12);
}

#[test]
fn doubling_subdivisions_stays_within_error_estimate() {
    let base = QuadratureSpec::default();
    let fine = QuadratureSpec {
        max_subdivisions: 2 * base.max_subdivisions,
        ..base
    };
    for (label, cfg) in golden::default_configs() {
        let k = DerivedConstants::from_config(&cfg);
        let runs = [
            (
                sep_oracle(&cfg, &k, &base).unwrap(),
                sep_oracle(&cfg, &k, &fine).unwrap(),
            ),
            (
                p_ex_oracle(&cfg, &k, &base).unwrap(),
                p_ex_oracle(&cfg, &k, &fine).unwrap(),
            ),
            (
                secrecy_outage_oracle(&cfg, &k, &base).unwrap(),
                secrecy_outage_oracle(&cfg, &k, &fine).unwrap(),
            ),
        ];
        for (a, b) in runs {
            assert!(a.uncertainty <= 1e-9, "{label}: estimate {}", a.uncertainty);
            assert!((a.value - b.value).abs() <= a.uncertainty, "{label}: {a:?} vs {b:?}");
        }
    }
}

#[test]
fn j12_identity() {
    for (label, cfg) in golden::default_configs() {
        let k = DerivedConstants::from_config(&cfg);
        let j12 = j12_oracle(&cfg, &k, &QuadratureSpec::default()).unwrap().value;
        let p_ex = p_ex_oracle(&cfg, &k, &QuadratureSpec::default()).unwrap().value;
        assert!((j12 - (1.0 - p_ex)).abs() < 1e-8, "{label}: {j12} vs {}", 1.0 - p_ex);
    }
}

#[test]
fn zero_su_power() {
    let cfg = ScenarioConfig {
        outage_threshold: 0.001,
        ..presets::find("case1").unwrap().config_at(-5.0)
    };
    let k = DerivedConstants::from_config(&cfg);
    assert_eq!(k.d, 0.0);
    let sep = sep_oracle(&cfg, &k, &QuadratureSpec::default()).unwrap().value;
    assert!((sep - 1.0).abs() < 1e-12);
    let analytic = p_existence_analytic(&k);
    assert_eq!(analytic.branch, Some(Branch::ZeroSuPower));
    let quad = p_ex_oracle(&cfg, &k, &QuadratureSpec::default()).unwrap().value;
    assert!((analytic.value - quad).abs() < 1e-10);
    assert!((analytic.value - cfg.omega.h / (cfg.omega.h + cfg.omega.f)).abs() < 1e-15);
    let out = secrecy_outage_oracle(&cfg, &k, &QuadratureSpec::default())
        .unwrap()
        .value;
    assert!((secrecy_outage_analytic(&k).value - out).abs() < 1e-10);
}

#[test]
fn vanishing_secrecy_rate() {
    for name in ["case1", "case11", "fig8-alpha0.5"] {
        let base = presets::find(name).unwrap().config_at(6.0);
        let cfg = ScenarioConfig {
            secrecy_rate_bps: 1e-4,
            ..base
        };
        let k = DerivedConstants::from_config(&cfg);
        let spec = QuadratureSpec::default();
        let out = secrecy_outage_oracle(&cfg, &k, &spec).unwrap().value;
        let p_ex = p_ex_oracle(&cfg, &k, &spec).unwrap().value;
        assert!((out - (1.0 - p_ex)).abs() < 1e-8, "{name}");
    }
}

#[test]
fn monte_carlo_limits() {
    let n = 1_000_000;
    let identical = ScenarioConfig {
        omega: MeanGains::uniform(3.0),
        ..presets::find("case10").unwrap().config_at(4.0)
    };
    let m = mc_metrics(&identical, n, 11).unwrap();
    assert!((m.p_ex.value - 0.5).abs() <= 3.0 * m.p_ex.stderr, "{:?}", m.p_ex);

    let cfg = presets::find("case1").unwrap().config_at(3.0);
    assert!(!adaptive_power(&cfg).clamped_at_peak);
    let m = mc_metrics(&cfg, n, 12).unwrap();
    assert!(
        (m.pu_outage.value - 0.01).abs() <= 3.0 * m.pu_outage.stderr,
        "{:?}",
        m.pu_outage
    );
}

#[test]
fn monte_carlo_stderr_scales_as_inverse_root_n() {
    let cfg = presets::find("case7").unwrap().config_at(5.0);
    let runs: Vec<_> = [10_000, 100_000, 1_000_000]
        .iter()
        .map(|&n| mc_metrics(&cfg, n, 21).unwrap())
        .collect();
    for w in runs.windows(2) {
        for (a, b) in [
            (w[0].sep, w[1].sep),
            (w[0].p_ex, w[1].p_ex),
            (w[0].secrecy_outage, w[1].secrecy_outage),
        ] {
            let ratio = a.stderr / b.stderr / 10f64.sqrt();
            assert!((ratio - 1.0).abs() < 0.2, "ratio {ratio}");
        }
    }
}

#[test]
fn symbol_level_sep_matches_conditional_average() {
    let cfg = presets::find("case1").unwrap().config_at(8.0);
    let n = 1_000_000;
    let rb = mc_metrics(&cfg, n, 31).unwrap().sep;
    let sym = mc_sep_symbol_level(&cfg, n, 32).unwrap();
    let joint = (rb.stderr.powi(2) + sym.stderr.powi(2)).sqrt();
    assert!((rb.value - sym.value).abs() <= 3.5 * joint, "{rb:?} vs {sym:?}");
    assert!((sym.value - REFERENCES[0].sep).abs() <= 3.5 * sym.stderr);
}

#[test]
fn monte_carlo_is_seed_deterministic() {
    let cfg = presets::find("case12").unwrap().config_at(12.0);
    assert_eq!(
        mc_metrics(&cfg, 50_000, 5).unwrap(),
        mc_metrics(&cfg, 50_000, 5).unwrap()
    );
    assert_ne!(
        mc_metrics(&cfg, 50_000, 5).unwrap(),
        mc_metrics(&cfg, 50_000, 6).unwrap()
    );
}
