//! Closed-form SEP, probability of non-zero secrecy capacity and secrecy
//! outage, with the branch each value came from.

use underlay_secrecy::analytic::{closed_form, p_existence_analytic, secrecy_outage_analytic, sep_analytic};
use underlay_secrecy::{presets, DerivedConstants};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["case1", "fig5-phi7", "case10", "case11"] {
        let cfg = presets::find(name).unwrap().config_at(10.0);
        let k = DerivedConstants::from_config(&cfg);
        let sep = sep_analytic(&k, cfg.modulation_eps, cfg.modulation_eta);
        let pex = p_existence_analytic(&k);
        let out = secrecy_outage_analytic(&k);
        println!("{name} at 10 dB (d = {:.4}):", k.d);
        println!("  SEP         {:.12}  [{}]", sep.value, sep.branch.unwrap().name());
        println!("  P_ex        {:.12}  [{}]", pex.value, pex.branch.unwrap().name());
        println!("  P_out,sec   {:.12}  [{}]", out.value, out.branch.unwrap().name());
    }

    // near A0 = D0 the partial-fraction form cancels; the series does not
    let (d, c, e) = (0.8, 5.0, 5.0);
    println!(
        "\n{:>8} {:>20} {:>20} {:>20}",
        "gap", "series", "partial fractions", "equal form"
    );
    for gap in [1e-2, 1e-4, 1e-6, 1e-8] {
        let a = d * (1.0 + gap);
        println!(
            "{gap:>8e} {:>20.15} {:>20.15} {:>20.15}",
            closed_form::pair_series(a, d, c, e),
            closed_form::pair_direct(a, d, c, e),
            closed_form::pair_equal(d, c, e)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("closed_forms example failed");
}
