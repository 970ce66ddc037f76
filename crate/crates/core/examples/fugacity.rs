// From phase-space density to fugacity, and the condensation guard.

use std::error::Error;

use thermal_spin::statmech::{fugacity_from_degeneracy, polylog_3_2, ZETA_3_2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for d in [0.01, 0.1, 0.5, 1.0, 2.0, 2.5, ZETA_3_2] {
        let z = fugacity_from_degeneracy(d)?;
        println!(
            "n λ³/3 = {d:<8.5} z = {z:.12}  residual {:.1e}",
            (polylog_3_2(z)? - d).abs()
        );
    }
    match fugacity_from_degeneracy(3.0) {
        Err(e) => println!("n λ³/3 = 3.0: {e}"),
        Ok(z) => return Err(format!("condensed gas accepted with z = {z}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
