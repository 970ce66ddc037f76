// Explicit separable mixture for the two-qutrit state.

use std::error::Error;

use thermal_spin::separability::{is_density_matrix, qutrit_decomposition, verify_decomposition};
use thermal_spin::statmech::ExchangeValue;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>12}",
        "f", "w(ρ0)", "w(σ0)", "w(σ1)", "residual"
    );
    for i in 0..=10 {
        let f = ExchangeValue::new(i as f64 / 10.0)?;
        let d = qutrit_decomposition(f)?;
        println!(
            "{:>5.2} {:>10.6} {:>10.6} {:>10.6} {:>12.2e}",
            f.value(),
            d.weight_rho0,
            d.weight_sigma0,
            d.weight_sigma1,
            verify_decomposition(f)?
        );
    }
    let d = qutrit_decomposition(ExchangeValue::ONE)?;
    for (name, m) in [("ρ0", &d.rho0), ("σ0", &d.sigma0), ("σ1", &d.sigma1)] {
        println!(
            "{name} is a density matrix: {}",
            is_density_matrix(m, 1e-12)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
