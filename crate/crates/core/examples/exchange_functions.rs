// Exchange amplitude f versus reduced separation for the three gases.

use std::error::Error;

use thermal_spin::statmech::{
    fermi_exchange_t0, massive_exchange, photon_exchange, photon_exchange_quadrature,
    ReducedSeparation,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "sep", "photon", "(quad)", "z=0.5", "z=1", "fermi T=0"
    );
    for i in 0..=10 {
        let x = ReducedSeparation::new(0.5 * i as f64)?;
        println!(
            "{:>6.2} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            x.value(),
            photon_exchange(x).value(),
            photon_exchange_quadrature(x)?.value(),
            massive_exchange(x, 0.5)?.value(),
            massive_exchange(x, 1.0)?.value(),
            fermi_exchange_t0(x).value(),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
