//! End-to-end reproduction run: closed-form spectra against the numeric
//! eigensolver, the separable decomposition, the roots-of-unity
//! discretization, the fermion contrast, and the exchange-function kernels.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::separability::{
    self, ppt_report_matrix, qubit_pt_min_eig_analytic, qutrit_pt_min_eig_analytic,
    rho0_closed_form, rho0_from_roots_of_unity,
};
use crate::spinstate::{exchange_matrix, two_spin_density, Statistics};
use crate::statmech::{
    fugacity_from_degeneracy, massive_exchange, photon_exchange, photon_exchange_quadrature,
    polylog_3_2, ExchangeValue, ReducedSeparation, ZETA_3_2,
};

pub const DEFAULT_GRID: usize = 101;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Number of uniform points on `f ∈ [0, 1]`.
    pub grid: usize,
    /// Flip the sign of `f²` in the bosonic states (harness self-test).
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            grid: DEFAULT_GRID,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "{}  {:width$}  {:>9.3} ms  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.elapsed.as_secs_f64() * 1e3,
                c.detail,
            )?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} of {} checks passed",
            self.checks.len() - failed,
            self.checks.len()
        )
    }
}

fn f_grid(n: usize) -> Vec<ExchangeValue> {
    (0..n)
        .map(|i| ExchangeValue::new(i as f64 / (n - 1) as f64).expect("grid lies in [0, 1]"))
        .collect()
}

fn bosonic_state(f: ExchangeValue, alpha: usize, opts: &VerifyOptions) -> Result<RealMatrix> {
    if opts.inject_fault {
        Ok(exchange_matrix(alpha, -f.squared()))
    } else {
        Ok(two_spin_density(f, alpha, Statistics::Boson)?.into_matrix())
    }
}

fn timed(name: &'static str, check: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match check() {
        Ok(outcome) => outcome,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckResult {
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn pt_spectrum_check(
    alpha: usize,
    analytic: impl Fn(ExchangeValue) -> f64 + Sync,
    opts: &VerifyOptions,
) -> Result<(bool, String)> {
    let rows: Vec<(f64, f64, f64)> = f_grid(opts.grid)
        .into_par_iter()
        .map(|f| {
            let report = ppt_report_matrix(&bosonic_state(f, alpha, opts)?, alpha)?;
            Ok((f.value(), report.min_eigenvalue, report.negativity))
        })
        .collect::<Result<_>>()?;
    let mut worst = (0.0_f64, 0.0);
    let mut min_eig = f64::INFINITY;
    let mut negativity = (0.0_f64, 0.0);
    for &(f, numeric, neg) in &rows {
        let dev = (numeric - analytic(ExchangeValue::new(f)?)).abs();
        if dev > worst.0 {
            worst = (dev, f);
        }
        min_eig = min_eig.min(numeric);
        if neg > negativity.0 {
            negativity = (neg, f);
        }
    }
    let passed = worst.0 <= 1e-12 && min_eig > 0.0;
    let mut detail = format!(
        "{} points, max |numeric - analytic| = {:.2e} (f = {}), min eigenvalue {:.6}",
        rows.len(),
        worst.0,
        worst.1,
        min_eig
    );
    if negativity.0 > 0.0 {
        detail.push_str(&format!(
            "; negativity {:.3e} detected at f = {}",
            negativity.0, negativity.1
        ));
    }
    Ok((passed, detail))
}

fn decomposition_check(opts: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst_err = 0.0_f64;
    let mut worst_sum = 0.0_f64;
    let mut min_weight = f64::INFINITY;
    for f in f_grid(opts.grid) {
        let d = separability::qutrit_decomposition(f)?;
        let w = d.weights();
        min_weight = w.iter().copied().fold(min_weight, f64::min);
        worst_sum = worst_sum.max((w.iter().sum::<f64>() - 1.0).abs());
        let target = bosonic_state(f, 3, opts)?;
        worst_err = worst_err.max(d.reconstruct().max_abs_diff(&target));
    }
    let components_ok = [
        separability::rho0_closed_form(),
        separability::sigma0(),
        separability::sigma1(),
    ]
    .iter()
    .map(|m| separability::is_density_matrix(m, 1e-12))
    .collect::<Result<Vec<bool>>>()?
    .into_iter()
    .all(|ok| ok);
    let passed = min_weight >= 0.0 && worst_sum <= 1e-14 && worst_err <= 1e-13 && components_ok;
    Ok((
        passed,
        format!(
            "min weight {min_weight:.3e}, max |Σw - 1| = {worst_sum:.2e}, \
             max reconstruction error {worst_err:.2e}, components valid: {components_ok}"
        ),
    ))
}

fn roots_of_unity_check() -> Result<(bool, String)> {
    let closed = rho0_closed_form();
    let mut worst = 0.0_f64;
    for n in [7, 8, 13, 100] {
        worst = worst.max(rho0_from_roots_of_unity(n)?.matrix.max_abs_diff(&closed));
    }
    let aliased = rho0_from_roots_of_unity(6)?.matrix.max_abs_diff(&closed);
    Ok((
        worst <= 1e-14 && aliased > 0.05,
        format!("N in {{7,8,13,100}}: max deviation {worst:.2e}; N = 6: {aliased:.4}"),
    ))
}

/// Minimum partial-transpose eigenvalue of the two-qubit fermion state.
fn fermion_min_eig(f: f64) -> Result<f64> {
    let rho = two_spin_density(ExchangeValue::new(f)?, 2, Statistics::Fermion)?;
    Ok(separability::ppt_report(&rho)?.min_eigenvalue)
}

/// Bisects the sign change of the fermion PT minimum eigenvalue on `[lo, hi]`.
pub fn fermion_ppt_threshold(mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let (flo, fhi) = (fermion_min_eig(lo)?, fermion_min_eig(hi)?);
    if !(flo > 0.0 && fhi < 0.0) {
        return Err(Error::Numeric(format!(
            "no sign change of the fermion PT minimum on [{lo}, {hi}]"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if fermion_min_eig(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn fermion_contrast_check() -> Result<(bool, String)> {
    let threshold = fermion_ppt_threshold(0.5, 0.9, 1e-12)?;
    let dev = (threshold - std::f64::consts::FRAC_1_SQRT_2).abs();
    let rho = two_spin_density(ExchangeValue::ONE, 2, Statistics::Fermion)?;
    let neg = separability::ppt_report(&rho)?.negativity;
    let analytic = qubit_pt_min_eig_analytic(ExchangeValue::new(threshold)?, Statistics::Fermion);
    Ok((
        dev <= 1e-8 && (neg - 0.5).abs() <= 1e-12,
        format!(
            "PPT flips at f = {threshold:.12} (|Δ| = {dev:.1e} from 1/√2, analytic min {analytic:.1e}); \
             negativity at f = 1: {neg}"
        ),
    ))
}

fn photon_cross_check() -> Result<(bool, String)> {
    let points = 50;
    let (lo, hi) = (1e-3_f64.ln(), 50.0_f64.ln());
    let devs: Vec<(f64, f64)> = (0..points)
        .into_par_iter()
        .map(|i| {
            let u = (lo + (hi - lo) * i as f64 / (points - 1) as f64).exp();
            let sep = ReducedSeparation::new(u)?;
            let series = photon_exchange(sep).value();
            let quad = photon_exchange_quadrature(sep)?.value();
            Ok(((series - quad).abs(), u))
        })
        .collect::<Result<_>>()?;
    let (worst, at) = devs
        .into_iter()
        .fold((0.0, 0.0), |acc, d| if d.0 > acc.0 { d } else { acc });
    Ok((
        worst <= 1e-8,
        format!("{points} log points on [1e-3, 50]: max |series - quadrature| = {worst:.2e} (u = {at:.4})"),
    ))
}

fn classical_limit_check() -> Result<(bool, String)> {
    let z = 1e-8;
    let mut worst = 0.0_f64;
    for i in 0..=60 {
        let s = 3.0 * i as f64 / 60.0;
        let f = massive_exchange(ReducedSeparation::new(s)?, z)?.value();
        worst = worst.max((f - (-std::f64::consts::PI * s * s).exp()).abs());
    }
    Ok((
        worst <= 1e-7,
        format!("z = 1e-8, s in [0, 3]: max |f - exp(-π s²)| = {worst:.2e}"),
    ))
}

fn fugacity_check() -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for i in 1..=100 {
        let d = ZETA_3_2 * i as f64 / 100.0;
        let z = fugacity_from_degeneracy(d)?;
        worst = worst.max((polylog_3_2(z)? - d).abs());
    }
    let refuses = matches!(
        fugacity_from_degeneracy(ZETA_3_2 * 1.001),
        Err(Error::Condensation { .. })
    );
    Ok((
        worst <= 1e-9 && refuses,
        format!(
            "100 points on (0, ζ(3/2)]: max |Li(z(d)) - d| = {worst:.2e}; condensed input refused: {refuses}"
        ),
    ))
}

/// Runs every check and collects the outcome; never stops at the first failure.
pub fn run_verification(opts: VerifyOptions) -> Result<VerificationReport> {
    if opts.grid < 2 {
        return Err(Error::Domain {
            what: "verification grid needs at least 2 points",
            value: opts.grid as f64,
        });
    }
    let checks = vec![
        timed("qubit-pt-spectrum", || {
            pt_spectrum_check(
                2,
                |f| qubit_pt_min_eig_analytic(f, Statistics::Boson),
                &opts,
            )
        }),
        timed("qutrit-pt-spectrum", || {
            pt_spectrum_check(3, qutrit_pt_min_eig_analytic, &opts)
        }),
        timed("separable-decomposition", || decomposition_check(&opts)),
        timed("roots-of-unity", roots_of_unity_check),
        timed("fermion-contrast", fermion_contrast_check),
        timed("photon-series-vs-quadrature", photon_cross_check),
        timed("massive-classical-limit", classical_limit_check),
        timed("fugacity-round-trip", fugacity_check),
    ];
    Ok(VerificationReport { checks })
}
