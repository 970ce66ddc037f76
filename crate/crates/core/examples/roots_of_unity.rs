// Replacing the continuous phase average of ρ0 by N product states.

use std::error::Error;

use thermal_spin::separability::{rho0_closed_form, rho0_from_roots_of_unity};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let exact = rho0_closed_form();
    for n in 1..=12 {
        let avg = rho0_from_roots_of_unity(n)?;
        println!(
            "N = {n:>2}: max |Δ| = {:.3e}, max |Im| = {:.1e}",
            avg.matrix.max_abs_diff(&exact),
            avg.max_imaginary
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
