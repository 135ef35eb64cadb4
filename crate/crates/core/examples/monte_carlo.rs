//! Slot-level simulation: estimates, standard errors and the symbol-level
//! cross-check of the conditional SEP average.

use underlay_secrecy::montecarlo::{mc_metrics, mc_sep_symbol_level};
use underlay_secrecy::presets;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = presets::find("case7").unwrap().config_at(5.0);
    for n in [10_000, 100_000, 1_000_000] {
        let m = mc_metrics(&cfg, n, 42)?;
        println!(
            "n = {n:>8}: PU outage {:.5} ± {:.1e}, SEP {:.5} ± {:.1e}, P_ex {:.5} ± {:.1e}, P_out,sec {:.5} ± {:.1e}",
            m.pu_outage.value,
            m.pu_outage.stderr,
            m.sep.value,
            m.sep.stderr,
            m.p_ex.value,
            m.p_ex.stderr,
            m.secrecy_outage.value,
            m.secrecy_outage.stderr
        );
    }

    let n = 1_000_000;
    let rb = mc_metrics(&cfg, n, 1)?.sep;
    let sym = mc_sep_symbol_level(&cfg, n, 2)?;
    println!(
        "\nSEP from conditional error probability {:.5} ± {:.1e}; from symbol decisions {:.5} ± {:.1e}",
        rb.value, rb.stderr, sym.value, sym.stderr
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("monte_carlo example failed");
}
