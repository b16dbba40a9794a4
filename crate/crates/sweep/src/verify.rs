//! Named cross-checks of the Gaussian pipeline against the Fock oracle.

use std::fmt;

use hopfield_core::{
    coherence_report, ground_state_covariance, log_negativity, mean_occupations,
    thermal_bare_covariance, BathSpec, ModelParams, StateSpec, Variant,
};
use hopfield_fock::{ground_state_fock, lindblad_steady_state_fock, negativity_fock, FockConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub tolerance: f64,
    pub observed: f64,
    /// Set when the check could not be evaluated.
    pub failure: Option<String>,
}

impl Check {
    fn measured(label: impl Into<String>, tolerance: f64, observed: f64) -> Self {
        Self {
            label: label.into(),
            tolerance,
            observed,
            failure: None,
        }
    }

    fn failed(label: impl Into<String>, tolerance: f64, why: impl fmt::Display) -> Self {
        Self {
            label: label.into(),
            tolerance,
            observed: f64::NAN,
            failure: Some(why.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.observed < self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict}  {:<44} tol {:.1e}  ",
            self.label, self.tolerance
        )?;
        match &self.failure {
            Some(why) => write!(f, "error: {why}"),
            None => write!(f, "observed {:.3e}", self.observed),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub preset: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {}", self.preset)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "FAILED"
            }
        )
    }
}

pub const VERIFY_PRESETS: &[(&str, &str)] = &[
    (
        "ground-point",
        "ground state at eta_a = 1, g = 1 against exact diagonalization",
    ),
    (
        "thermal-point",
        "steady state at eta_a = 1, g = 0.3, T = 1 against the Fock Lindblad fixed point",
    ),
    (
        "no-anti-zero",
        "ground-state coherence of the passive Hamiltonian over g in [0, 3]",
    ),
];

fn max_abs_diff(a: &nalgebra::Matrix4<f64>, b: &nalgebra::Matrix4<f64>) -> f64 {
    (a - b).abs().max()
}

fn ground_point() -> Vec<Check> {
    let p = ModelParams::scaled(1.0, 1.0, Variant::FullHopfield).expect("valid point");
    let gauss = match ground_state_covariance(&p) {
        Ok(s) => s,
        Err(e) => return vec![Check::failed("gaussian ground state", 0.0, e)],
    };
    let fock = match ground_state_fock(&p, &FockConfig::default()) {
        Ok(s) => s,
        Err(e) => return vec![Check::failed("fock ground state", 1e-3, e)],
    };
    let (mu_a, mu_b) = mean_occupations(gauss.sigma());
    vec![
        Check::measured("mu_a deviation", 1e-3, (fock.occupations[0] - mu_a).abs()),
        Check::measured("mu_b deviation", 1e-3, (fock.occupations[1] - mu_b).abs()),
        Check::measured(
            "covariance max entry deviation",
            1e-3,
            max_abs_diff(&fock.covariance, gauss.sigma()),
        ),
        Check::measured(
            "log-negativity deviation",
            1e-3,
            (negativity_fock(&fock.state) - log_negativity(gauss.sigma())).abs(),
        ),
        Check::measured(
            "fock truncation edge population",
            1e-6,
            fock.edge_population,
        ),
    ]
}

fn thermal_point() -> Vec<Check> {
    let p = ModelParams::scaled(1.0, 0.3, Variant::FullHopfield).expect("valid point");
    let bath = BathSpec::equilibrium(1e-3, 1e-3, 1.0).expect("valid bath");
    let gauss = match thermal_bare_covariance(&p, &bath) {
        Ok(s) => s,
        Err(e) => return vec![Check::failed("gaussian steady state", 1e-2, e)],
    };
    match lindblad_steady_state_fock(&p, &bath, &FockConfig::default()) {
        Ok(fock) => vec![
            Check::measured(
                "covariance max entry deviation",
                1e-2,
                max_abs_diff(&fock.covariance, gauss.sigma()),
            ),
            Check::measured(
                "fock truncation edge population",
                1e-6,
                fock.edge_population,
            ),
            Check::measured("fock generator residual", 1e-10, fock.residual),
        ],
        Err(e) => vec![Check::failed("fock steady state", 1e-2, e)],
    }
}

fn no_anti_zero() -> Vec<Check> {
    let mut worst = 0.0f64;
    for k in 0..=300 {
        let g = 0.01 * k as f64;
        let p = ModelParams::scaled(1.0, g, Variant::NoAnti).expect("valid point");
        match coherence_report(&p, &StateSpec::Ground) {
            Ok(r) => worst = worst.max(r.c_tot).max(r.c_a).max(r.c_b),
            Err(e) => {
                return vec![Check::failed(
                    format!("ground coherence at g = {g}"),
                    1e-12,
                    e,
                )]
            }
        }
    }
    vec![Check::measured("max ground coherence", 1e-12, worst)]
}

pub fn verify(preset: &str) -> Option<VerifyReport> {
    let checks = match preset {
        "ground-point" => ground_point(),
        "thermal-point" => thermal_point(),
        "no-anti-zero" => no_anti_zero(),
        _ => return None,
    };
    Some(VerifyReport {
        preset: preset.to_string(),
        checks,
    })
}
