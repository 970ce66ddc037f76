// Two blackbody photons: polarization state and its partial transpose.

use std::error::Error;

use thermal_spin::separability::{ppt_report, qubit_pt_min_eig_analytic};
use thermal_spin::spinstate::{two_spin_density, Statistics};
use thermal_spin::statmech::{photon_exchange, ReducedSeparation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rho = two_spin_density(
        photon_exchange(ReducedSeparation::ZERO),
        2,
        Statistics::Boson,
    )?;
    println!("coincident photons: {:?}", rho.matrix());

    for u in [0.0, 0.25, 0.5, 1.0, 2.0, 5.0] {
        let f = photon_exchange(ReducedSeparation::new(u)?);
        let report = ppt_report(&two_spin_density(f, 2, Statistics::Boson)?)?;
        println!(
            "u = {u:<5} f = {:.6}  min eig(ρ^T_B) = {:.6} (closed form {:.6})  PPT: {}",
            f.value(),
            report.min_eigenvalue,
            qubit_pt_min_eig_analytic(f, Statistics::Boson),
            report.is_ppt
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
