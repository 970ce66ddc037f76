// Electron spins in a free Fermi gas are entangled at short range; the
// bosonic states with the same f never are.

use std::error::Error;

use thermal_spin::cli::verify::fermion_ppt_threshold;
use thermal_spin::separability::ppt_report;
use thermal_spin::spinstate::{two_spin_density, Statistics};
use thermal_spin::statmech::{fermi_exchange_t0, ExchangeValue, ReducedSeparation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for i in 0..=10 {
        let f = ExchangeValue::new(i as f64 / 10.0)?;
        let boson = ppt_report(&two_spin_density(f, 2, Statistics::Boson)?)?;
        let fermion = ppt_report(&two_spin_density(f, 2, Statistics::Fermion)?)?;
        println!(
            "f = {:.1}: boson negativity {:.4}, fermion negativity {:.4}",
            f.value(),
            boson.negativity,
            fermion.negativity
        );
    }
    let threshold = fermion_ppt_threshold(0.5, 0.9, 1e-12)?;
    println!(
        "fermion PPT threshold f = {threshold:.12} (1/√2 = {:.12})",
        std::f64::consts::FRAC_1_SQRT_2
    );

    // separation k_F r below which the electron pair is entangled
    let (mut lo, mut hi) = (0.0, 3.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if fermi_exchange_t0(ReducedSeparation::new(mid)?).value() > threshold {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    println!("electron spins entangled for k_F r < {lo:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
