//! Bose occupation statistics and the exchange function `f(r)` of ideal
//! quantum gases, in reduced units.
//!
//! Separations are dimensionless throughout this module:
//!
//! * photons: `u = r k_B T / (ħ c)`
//! * massive non-relativistic bosons: `s = r / λ`, with `λ = h / sqrt(2π m k_B T)`
//! * zero-temperature Fermi gas: `x = k_F r`
//!
//! The exchange function is normalized so that `f(0) = 1`. For the
//! photon gas it is
//!
//! ```text
//! f(u) = (1/ζ(3)) Σ_{n≥1} n / (n² + u²)²
//! ```
//!
//! and for the massive gas at fugacity `z`
//!
//! ```text
//! f(s) = Σ_{l≥1} z^l l^{-3/2} exp(-π s² / l) / Li_{3/2}(z)
//! ```

pub mod quadrature;

use crate::error::{Error, Result};

/// ζ(3/2), the phase-space density `nλ³/α` at the onset of condensation.
pub const ZETA_3_2: f64 = 2.612_375_348_685_488;
/// ζ(3), the normalization of the photon exchange series.
pub const ZETA_3: f64 = 1.202_056_903_159_594_3;

/// Thermal regime of the gas whose exchange function feeds the spin layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThermalGasSpec {
    /// Blackbody photons: two polarizations, zero chemical potential.
    MasslessPhoton,
    /// Massive spin-1 ideal Bose gas with fugacity `0 < z <= 1`.
    MassiveBose { fugacity: f64 },
}

impl ThermalGasSpec {
    pub fn massive(fugacity: f64) -> Result<Self> {
        check_fugacity(fugacity)?;
        Ok(ThermalGasSpec::MassiveBose { fugacity })
    }

    /// Massive gas specified by its phase-space density `nλ³/α`.
    pub fn massive_from_degeneracy(degeneracy: f64) -> Result<Self> {
        Self::massive(fugacity_from_degeneracy(degeneracy)?)
    }

    /// Number of spin states taking part in the exchange.
    pub fn alpha(&self) -> usize {
        match self {
            ThermalGasSpec::MasslessPhoton => 2,
            ThermalGasSpec::MassiveBose { .. } => 3,
        }
    }

    pub fn fugacity(&self) -> Option<f64> {
        match self {
            ThermalGasSpec::MasslessPhoton => None,
            ThermalGasSpec::MassiveBose { fugacity } => Some(*fugacity),
        }
    }

    /// Exchange function of this gas at reduced separation `sep`.
    pub fn exchange(&self, sep: ReducedSeparation) -> Result<ExchangeValue> {
        match *self {
            ThermalGasSpec::MasslessPhoton => Ok(photon_exchange(sep)),
            ThermalGasSpec::MassiveBose { fugacity } => massive_exchange(sep, fugacity),
        }
    }
}

/// Non-negative dimensionless separation.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedSeparation(f64);

impl ReducedSeparation {
    pub const ZERO: ReducedSeparation = ReducedSeparation(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(ReducedSeparation(value))
        } else {
            Err(Error::Domain {
                what: "reduced separation must be finite and non-negative",
                value,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ReducedSeparation {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Normalized exchange amplitude `f`, with `|f| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ExchangeValue(f64);

impl ExchangeValue {
    pub const ZERO: ExchangeValue = ExchangeValue(0.0);
    pub const ONE: ExchangeValue = ExchangeValue(1.0);

    pub fn new(f: f64) -> Result<Self> {
        if f.is_finite() && f.abs() <= 1.0 {
            Ok(ExchangeValue(f))
        } else {
            Err(Error::Domain {
                what: "exchange value must satisfy |f| <= 1",
                value: f,
            })
        }
    }

    // Float noise can push a normalized ratio a few ulp past 1.
    fn clamped(f: f64) -> Self {
        debug_assert!(
            f.is_finite() && f.abs() <= 1.0 + 1e-12,
            "exchange value {f}"
        );
        ExchangeValue(f.clamp(-1.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn squared(self) -> f64 {
        self.0 * self.0
    }
}

impl TryFrom<f64> for ExchangeValue {
    type Error = Error;

    fn try_from(f: f64) -> Result<Self> {
        Self::new(f)
    }
}

/// Mean Bose occupation `1 / (e^x - 1)` at reduced energy `x = β(ε - μ)`.
pub fn bose_occupation(x: f64) -> Result<f64> {
    if x > 0.0 {
        Ok(1.0 / x.exp_m1())
    } else {
        Err(Error::Domain {
            what: "bose occupation needs beta*(eps - mu) > 0",
            value: x,
        })
    }
}

fn check_fugacity(z: f64) -> Result<()> {
    if z > 0.0 && z <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "fugacity must lie in (0, 1]",
            value: z,
        })
    }
}

const SERIES_REL_TOL: f64 = 1e-15;
const EM_MIN_TERMS: usize = 1000;

/// `Σ_{l≥1} z^l l^{-3/2} exp(-c/l)` for `0 < z <= 1`, `c >= 0`.
///
/// Terms are summed directly while the geometric tail bound
/// `z^{N+1} / ((1-z)(N+1)^{3/2})` is above `abs_tol`. If that bound is not
/// met by the switch-over index the remaining tail is replaced by its
/// Euler-Maclaurin expansion, which covers `z = 1` and fugacities close to it.
fn bose_series(z: f64, c: f64, abs_tol: f64) -> Result<f64> {
    let switch = EM_MIN_TERMS.max((32.0 * c.sqrt()).ceil() as usize);
    let mut sum = 0.0;
    let mut zl = 1.0;
    for l in 1..switch {
        let lf = l as f64;
        zl *= z;
        sum += zl * (-c / lf).exp() / (lf * lf.sqrt());
        if z < 1.0 {
            let next = lf + 1.0;
            let bound = zl * z / ((1.0 - z) * next * next.sqrt());
            if bound < abs_tol {
                return Ok(sum);
            }
        }
    }
    let mu = -(z - 1.0).ln_1p();
    Ok(sum + euler_maclaurin_tail(mu, c, switch as f64)?)
}

/// `Σ_{l≥n} φ(l)` for `φ(l) = exp(-μl - c/l) l^{-3/2}`.
fn euler_maclaurin_tail(mu: f64, c: f64, n: f64) -> Result<f64> {
    const A: f64 = 1.5;
    // ∫_n^∞ φ dl, substituting l = n / w².
    let integrand = |w: f64| {
        let decay = if mu > 0.0 { mu * n / (w * w) } else { 0.0 };
        (-decay - c * w * w / n).exp()
    };
    let integral = quadrature::integrate(integrand, &[0.0, 0.5, 1.0], 1e-17, 1e-15, 2000)?.value
        * 2.0
        / n.sqrt();

    let phi = (-mu * n - c / n).exp() / (n * n.sqrt());
    let h1 = -mu - A / n + c / (n * n);
    let h2 = A / (n * n) - 2.0 * c / (n * n * n);
    let h3 = -2.0 * A / (n * n * n) + 6.0 * c / (n * n * n * n);
    let d1 = phi * h1;
    let d3 = phi * (h1 * h1 * h1 + 3.0 * h1 * h2 + h3);
    Ok(integral + 0.5 * phi - d1 / 12.0 + d3 / 720.0)
}

/// Polylogarithm `Li_{3/2}(z) = Σ_{l≥1} z^l / l^{3/2}` on `0 <= z <= 1`.
pub fn polylog_3_2(z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain {
            what: "Li_{3/2} is evaluated only for 0 <= z <= 1",
            value: z,
        });
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    // Li_{3/2}(z) >= z, so this is a relative tolerance on the result.
    bose_series(z, 0.0, SERIES_REL_TOL * z)
}

/// Inverts `d = Li_{3/2}(z)` for the fugacity, where `d = nλ³/α` is the
/// phase-space density per spin state.
pub fn fugacity_from_degeneracy(d: f64) -> Result<f64> {
    if d.is_nan() || d <= 0.0 {
        return Err(Error::Domain {
            what: "degeneracy must be positive",
            value: d,
        });
    }
    if d > ZETA_3_2 {
        return Err(Error::Condensation {
            degeneracy: d,
            critical: ZETA_3_2,
        });
    }
    if d >= polylog_3_2(1.0)?.min(ZETA_3_2) {
        return Ok(1.0);
    }

    const MAX_ITER: usize = 200;
    const Z_TOL: f64 = 1e-12;
    const RESIDUAL_TOL: f64 = 1e-12;
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut best = (f64::INFINITY, 0.5);
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let residual = polylog_3_2(mid)? - d;
        if residual.abs() < best.0 {
            best = (residual.abs(), mid);
        }
        if residual < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        // Near z = 1 the slope of Li_{3/2} diverges, so a small bracket
        // alone does not pin down d; keep halving until both agree.
        if hi - lo <= Z_TOL && best.0 <= RESIDUAL_TOL {
            break;
        }
    }
    Ok(best.1)
}

/// Photon exchange function at reduced separation `u`.
pub fn photon_exchange(u: ReducedSeparation) -> ExchangeValue {
    let u = u.value();
    if u == 0.0 {
        return ExchangeValue::ONE;
    }
    let u2 = u * u;
    let term = |x: f64| x / ((x * x + u2) * (x * x + u2));

    // Direct sum below n_cut, Euler-Maclaurin tail above. The remainder is
    // O(n_cut^-8) once n_cut exceeds u.
    let n_cut = 100 + u.ceil() as usize;
    let head: f64 = (1..n_cut).rev().map(|n| term(n as f64)).sum();

    let x = n_cut as f64;
    let d = x * x + u2;
    let integral = 0.5 / d;
    let d1 = (u2 - 3.0 * x * x) / (d * d * d);
    let d3 = 12.0 * (-5.0 * x.powi(4) + 10.0 * x * x * u2 - u2 * u2) / d.powi(5);
    let tail = integral + 0.5 * term(x) - d1 / 12.0 + d3 / 720.0;

    ExchangeValue::clamped((head + tail) / ZETA_3)
}

/// Photon exchange function by direct quadrature of the continuum k-integral
///
/// ```text
/// f(u) = 1 / (2 ζ(3) u) ∫_0^∞ x sin(x u) / (e^x - 1) dx
/// ```
///
/// Independent of the series in [`photon_exchange`]; used to cross-check it.
pub fn photon_exchange_quadrature(u: ReducedSeparation) -> Result<ExchangeValue> {
    const CUTOFF: f64 = 64.0;
    let u = u.value();
    let integrand = |x: f64| {
        let sinc = if u == 0.0 { x } else { (x * u).sin() / u };
        x * sinc / x.exp_m1()
    };
    // One panel per half period keeps the Kronrod rule away from aliasing.
    let width = if u > 0.0 {
        (std::f64::consts::PI / u).min(2.0)
    } else {
        2.0
    };
    let panels = (CUTOFF / width).ceil() as usize;
    let breakpoints: Vec<f64> = (0..=panels)
        .map(|i| (i as f64 * width).min(CUTOFF))
        .collect();
    let integral = quadrature::integrate(integrand, &breakpoints, 1e-14, 1e-14, 50 * panels + 200)?;
    let f = integral.value / (2.0 * ZETA_3);
    if f.abs() > 1.0 + 1e-9 {
        return Err(Error::Numeric(format!(
            "photon quadrature at u = {u} gave f = {f} (error estimate {:e})",
            integral.error
        )));
    }
    Ok(ExchangeValue::clamped(f))
}

/// Exchange function of a massive ideal Bose gas at reduced separation
/// `s = r/λ` and fugacity `z`.
pub fn massive_exchange(s: ReducedSeparation, z: f64) -> Result<ExchangeValue> {
    check_fugacity(z)?;
    let s = s.value();
    if s == 0.0 {
        return Ok(ExchangeValue::ONE);
    }
    let norm = polylog_3_2(z)?;
    let c = std::f64::consts::PI * s * s;
    let numerator = bose_series(z, c, SERIES_REL_TOL * norm)?;
    Ok(ExchangeValue::clamped(numerator / norm))
}

/// Exchange function of the zero-temperature free Fermi gas,
/// `3 (sin x - x cos x) / x³` with `x = k_F r`.
pub fn fermi_exchange_t0(x: ReducedSeparation) -> ExchangeValue {
    let x = x.value();
    let f = if x < 1e-2 {
        let x2 = x * x;
        1.0 - x2 / 10.0 + x2 * x2 / 280.0
    } else {
        3.0 * (x.sin() - x * x.cos()) / (x * x * x)
    };
    ExchangeValue::clamped(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sep(v: f64) -> ReducedSeparation {
        ReducedSeparation::new(v).unwrap()
    }

    #[test]
    fn occupation_values() {
        assert!((bose_occupation(std::f64::consts::LN_2).unwrap() - 1.0).abs() < 1e-15);
        assert!(bose_occupation(50.0).unwrap() < 1e-21);
        let series: f64 = (1..200).map(|n| (-(n as f64)).exp()).sum();
        assert!((bose_occupation(1.0).unwrap() - series).abs() < 1e-15);
        assert!((bose_occupation(1.0).unwrap() - 0.581_976_706_869_326_4).abs() < 1e-15);
    }

    #[test]
    fn occupation_rejects_non_positive_energy() {
        assert!(matches!(bose_occupation(0.0), Err(Error::Domain { .. })));
        assert!(bose_occupation(-1.0).is_err());
        assert!(bose_occupation(f64::NAN).is_err());
    }

    #[test]
    fn polylog_known_values() {
        assert_eq!(polylog_3_2(0.0).unwrap(), 0.0);
        assert!((polylog_3_2(1.0).unwrap() - ZETA_3_2).abs() < 1e-12);
        // reference values from 30-digit arithmetic
        assert!((polylog_3_2(0.5).unwrap() - 0.624_837_020_819_913_9).abs() < 1e-12);
        assert!((polylog_3_2(0.99).unwrap() - 2.271_660_077_007_999).abs() < 1e-12);
        assert!((polylog_3_2(0.9999).unwrap() - 2.577_071_427_106_055).abs() < 1e-12);
    }

    #[test]
    fn polylog_domain() {
        assert!(polylog_3_2(-0.1).is_err());
        assert!(polylog_3_2(1.0 + 1e-12).is_err());
        assert!(polylog_3_2(f64::NAN).is_err());
    }

    #[test]
    fn euler_maclaurin_path_matches_direct_sum_below_switch() {
        // z = 0.97 sums directly; forcing the tail from l = 1000 must agree.
        let z: f64 = 0.97;
        let direct = polylog_3_2(z).unwrap();
        let mu = -z.ln();
        let head: f64 = (1..1000).map(|l| z.powi(l) / (l as f64).powf(1.5)).sum();
        let with_tail = head + euler_maclaurin_tail(mu, 0.0, 1000.0).unwrap();
        assert!((direct - with_tail).abs() < 1e-14);
    }

    #[test]
    fn fugacity_inversion() {
        assert_eq!(fugacity_from_degeneracy(ZETA_3_2).unwrap(), 1.0);
        let z = fugacity_from_degeneracy(0.01).unwrap();
        assert!((z - 0.009_964_702_153_251_513).abs() < 1e-12);
        let z = fugacity_from_degeneracy(2.0).unwrap();
        assert!((z - 0.965_585_055_454_323_5).abs() < 1e-11);
    }

    #[test]
    fn fugacity_errors() {
        assert!(matches!(
            fugacity_from_degeneracy(3.0),
            Err(Error::Condensation { .. })
        ));
        assert!(matches!(
            fugacity_from_degeneracy(0.0),
            Err(Error::Domain { .. })
        ));
        assert!(fugacity_from_degeneracy(-1.0).is_err());
    }

    #[test]
    fn photon_series_reference_values() {
        assert_eq!(photon_exchange(sep(0.0)).value(), 1.0);
        // 30-digit reference sums
        assert!((photon_exchange(sep(1.0)).value() - 0.330_364_369_886_186).abs() < 1e-13);
        assert!((photon_exchange(sep(5.0)).value() - 0.016_526_312_176_872_08).abs() < 1e-13);
        assert!((photon_exchange(sep(10.0)).value() - 0.004_152_590_335_886_768).abs() < 1e-13);
        assert!((photon_exchange(sep(1e-3)).value() - 0.999_998_274_746_827_9).abs() < 1e-13);
        let tail = 1.0 / (2.0 * ZETA_3 * 100.0);
        assert!((photon_exchange(sep(10.0)).value() - tail).abs() < 1e-4);
    }

    #[test]
    fn photon_quadrature_agrees_with_series() {
        for u in [0.0, 1e-3, 0.3, 1.0, 5.0, 20.0, 50.0] {
            let q = photon_exchange_quadrature(sep(u)).unwrap().value();
            let s = photon_exchange(sep(u)).value();
            assert!((q - s).abs() < 1e-8, "u = {u}: {q} vs {s}");
        }
    }

    #[test]
    fn massive_limits() {
        for z in [1e-6, 0.3, 1.0] {
            assert_eq!(massive_exchange(sep(0.0), z).unwrap().value(), 1.0);
        }
        let f = massive_exchange(sep(1.0), 1e-6).unwrap().value();
        assert!((f - 0.043_213_976_481_912_62).abs() < 1e-12);
        assert!((f - (-std::f64::consts::PI).exp()).abs() < 1e-6);
    }

    #[test]
    fn massive_reference_values() {
        // 30-digit series sums
        let cases = [
            (0.5, 1.0, 0.702_484_059_035_614_5),
            (2.0, 1.0, 0.191_398_030_270_026_05),
            (1.0, 0.5, 0.087_356_625_788_066_67),
        ];
        for (s, z, expected) in cases {
            let f = massive_exchange(sep(s), z).unwrap().value();
            assert!((f - expected).abs() < 1e-10, "s={s} z={z}: {f}");
        }
    }

    #[test]
    fn massive_rejects_bad_fugacity() {
        assert!(massive_exchange(sep(1.0), 0.0).is_err());
        assert!(massive_exchange(sep(1.0), 1.5).is_err());
        assert!(ThermalGasSpec::massive(-0.2).is_err());
    }

    #[test]
    fn fermi_values() {
        assert_eq!(fermi_exchange_t0(sep(0.0)).value(), 1.0);
        let pi = std::f64::consts::PI;
        assert!((fermi_exchange_t0(sep(pi)).value() - 3.0 / (pi * pi)).abs() < 1e-15);
        assert!(fermi_exchange_t0(sep(4.493_409_457_909_064)).value().abs() < 1e-9);
        // series and closed form agree around the switch-over
        let x: f64 = 0.999e-2;
        let closed = 3.0 * (x.sin() - x * x.cos()) / x.powi(3);
        assert!((fermi_exchange_t0(sep(x)).value() - closed).abs() < 1e-9);
    }

    #[test]
    fn gas_spec_alpha() {
        assert_eq!(ThermalGasSpec::MasslessPhoton.alpha(), 2);
        assert_eq!(ThermalGasSpec::massive(0.5).unwrap().alpha(), 3);
        assert!(matches!(
            ThermalGasSpec::massive_from_degeneracy(3.0),
            Err(Error::Condensation { .. })
        ));
    }

    #[test]
    fn separation_and_exchange_validation() {
        assert!(ReducedSeparation::new(-1e-3).is_err());
        assert!(ReducedSeparation::new(f64::INFINITY).is_err());
        assert!(ExchangeValue::new(1.0 + 1e-9).is_err());
        assert!(ExchangeValue::new(-1.0).is_ok());
    }
}
