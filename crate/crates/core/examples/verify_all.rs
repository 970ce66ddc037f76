// The full reproduction run used by `thermal-spin verify-paper`.

use std::error::Error;

use thermal_spin::cli::verify::{run_verification, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = run_verification(VerifyOptions::default())?;
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err("verification failed".into())
    }
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
