//! SI conversion into the reduced units used by [`crate::statmech`].

use crate::error::{Error, Result};

/// Reduced Planck constant ħ [J s] (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Planck constant h [J s] (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Boltzmann constant k_B [J/K] (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Speed of light c [m/s] (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Atomic mass unit [kg] (CODATA 2018).
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_6e-27;

fn positive(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}

/// Thermal photon length `ħc / (k_B T)`; the photon separation is `u = r / L`.
pub fn photon_length_m(temperature_k: f64) -> Result<f64> {
    let t = positive("temperature must be positive", temperature_k)?;
    Ok(HBAR * SPEED_OF_LIGHT / (BOLTZMANN * t))
}

/// Thermal de Broglie wavelength `h / sqrt(2π m k_B T)`.
pub fn thermal_wavelength_m(mass_kg: f64, temperature_k: f64) -> Result<f64> {
    let m = positive("particle mass must be positive", mass_kg)?;
    let t = positive("temperature must be positive", temperature_k)?;
    Ok(PLANCK / (2.0 * std::f64::consts::PI * m * BOLTZMANN * t).sqrt())
}

/// Phase-space density per spin state, `n λ³ / α`.
pub fn degeneracy(density_m3: f64, wavelength_m: f64, alpha: usize) -> Result<f64> {
    let n = positive("number density must be positive", density_m3)?;
    Ok(n * wavelength_m.powi(3) / alpha as f64)
}

/// Fermi wavevector `(3π² n)^{1/3}` of a spin-1/2 gas [1/m].
pub fn fermi_wavevector(density_m3: f64) -> Result<f64> {
    let n = positive("number density must be positive", density_m3)?;
    Ok((3.0 * std::f64::consts::PI.powi(2) * n).cbrt())
}

pub fn amu_to_kg(mass_amu: f64) -> Result<f64> {
    Ok(positive("particle mass must be positive", mass_amu)? * ATOMIC_MASS_UNIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn photon_length_at_room_temperature() {
        // ħc/k_B = 2.2898e-3 m K
        let l = photon_length_m(300.0).unwrap();
        assert!((l * 300.0 - 2.289_8e-3).abs() < 1e-7);
        assert!(photon_length_m(0.0).is_err());
    }

    #[test]
    fn helium_wavelength() {
        // He-4 at 1 K: λ ≈ 8.72e-10 m
        let m = amu_to_kg(4.002_602).unwrap();
        let lambda = thermal_wavelength_m(m, 1.0).unwrap();
        assert!((lambda - 8.72e-10).abs() < 0.01e-10, "{lambda}");
    }

    #[test]
    fn degeneracy_scaling() {
        let d = degeneracy(1e27, 1e-9, 3).unwrap();
        assert!((d - 1.0 / 3.0).abs() < 1e-15);
        assert!(degeneracy(-1.0, 1e-9, 3).is_err());
    }

    #[test]
    fn copper_fermi_wavevector() {
        // n = 8.47e28 m^-3 gives k_F ≈ 1.36e10 1/m
        let k = fermi_wavevector(8.47e28).unwrap();
        assert!((k - 1.36e10).abs() < 0.01e10);
    }
}
