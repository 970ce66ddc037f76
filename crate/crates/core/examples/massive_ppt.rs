// Two spin-1 atoms of a thermal Bose gas (⁸⁷Rb near degeneracy).

use std::error::Error;

use thermal_spin::cli::units;
use thermal_spin::separability::{ppt_report, qutrit_pt_min_eig_analytic};
use thermal_spin::spinstate::{two_spin_density, Statistics};
use thermal_spin::statmech::{ReducedSeparation, ThermalGasSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let temperature = 200e-9;
    let density = 1e19;
    let lambda = units::thermal_wavelength_m(units::amu_to_kg(86.909)?, temperature)?;
    let degeneracy = units::degeneracy(density, lambda, 3)?;
    let gas = ThermalGasSpec::massive_from_degeneracy(degeneracy)?;
    println!(
        "λ = {:.3e} m, n λ³/3 = {degeneracy:.4}, z = {:.6}",
        lambda,
        gas.fugacity().unwrap_or(0.0)
    );

    for r_nm in [0.0, 50.0, 100.0, 200.0, 400.0] {
        let s = ReducedSeparation::new(r_nm * 1e-9 / lambda)?;
        let f = gas.exchange(s)?;
        let report = ppt_report(&two_spin_density(f, 3, Statistics::Boson)?)?;
        println!(
            "r = {r_nm:>5} nm  f = {:.6}  min eig = {:.6} (closed form {:.6})",
            f.value(),
            report.min_eigenvalue,
            qutrit_pt_min_eig_analytic(f)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
