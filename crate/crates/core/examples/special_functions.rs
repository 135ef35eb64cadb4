//! Error function, exponential integral and the overflow-safe scaled forms.

use underlay_secrecy::specialfn::{erf, erfc, erfcx, exp_scaled_gamma0, expint_ei, expint_gamma0};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>8} {:>22} {:>22} {:>22}", "x", "erf", "erfc", "erfcx");
    for x in [0.0, 0.5, 1.0, 2.0, 5.0, 30.0] {
        println!("{x:>8} {:>22.15e} {:>22.15e} {:>22.15e}", erf(x), erfc(x), erfcx(x));
    }

    println!("\n{:>8} {:>22} {:>22} {:>22}", "z", "Γ(0,z)", "-Ei(-z)", "e^z Γ(0,z)");
    for z in [1e-8, 1e-3, 1.0, 10.0, 700.0, 1e5] {
        let g = expint_gamma0(z)?;
        let ei = expint_ei(-z)?;
        let scaled = exp_scaled_gamma0(z)?;
        println!("{z:>8e} {g:>22.15e} {:>22.15e} {:>22.15e}", -ei, scaled.value);
    }

    // the naive product overflows long before the scaled value loses accuracy
    let z = 1000.0;
    let naive = f64::exp(z) * expint_gamma0(z)?;
    let scaled = exp_scaled_gamma0(z)?.value;
    println!("\nz = {z}: naive e^z·Γ(0,z) = {naive}, scaled = {scaled:.15e}");
    assert!(scaled > 1.0 / (z + 1.0) && scaled < 1.0 / z);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("special_functions example failed");
}
