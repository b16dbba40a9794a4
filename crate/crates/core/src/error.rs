use thiserror::Error;

use crate::model::Variant;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("operation requires the {expected} variant, got {found}")]
    WrongVariant { expected: Variant, found: Variant },

    #[error("beyond critical coupling: g = {g} >= g_C = {critical}")]
    BeyondCriticalCoupling { g: f64, critical: f64 },

    #[error("dynamically unstable quadratic form (max |Re λ| = {max_real:e})")]
    Unstable { max_real: f64 },

    #[error("quadratic form is not bounded below")]
    NotBoundedBelow,

    #[error("degenerate polaritons: ω+ = {omega_plus}, ω- = {omega_minus}")]
    DegeneratePolaritons { omega_plus: f64, omega_minus: f64 },

    #[error("undamped mode {mode}, no unique steady state")]
    UndampedMode { mode: &'static str },

    #[error("unphysical symplectic eigenvalue {value} < 1/2")]
    UnphysicalEigenvalue { value: f64 },

    #[error("covariance matrix is not symmetric positive definite")]
    NotPositiveDefinite,
}

impl Error {
    /// Stable machine-readable tag, used for error rows in sweep output.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "invalid-parameter",
            Error::WrongVariant { .. } => "wrong-variant",
            Error::BeyondCriticalCoupling { .. } => "beyond-critical",
            Error::Unstable { .. } => "unstable",
            Error::NotBoundedBelow => "not-bounded-below",
            Error::DegeneratePolaritons { .. } => "degenerate-polaritons",
            Error::UndampedMode { .. } => "undamped-mode",
            Error::UnphysicalEigenvalue { .. } => "unphysical",
            Error::NotPositiveDefinite => "not-positive-definite",
        }
    }
}
