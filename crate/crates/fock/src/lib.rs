//! Truncated-Fock-space oracle for the two-mode Hopfield family.
//!
//! Nothing here uses Gaussian-state machinery: ground states come from a
//! sparse Lanczos solve, steady states from the fixed point of the polariton
//! Lindblad generator, and covariances are read off ladder-operator moments.
//! The only thing borrowed from the Gaussian core is the polariton basis that
//! defines the jump operators, plus the rates.

mod oracle;
pub mod solvers;
pub mod sparse;
mod state;

use thiserror::Error;

pub use oracle::{
    build_hamiltonian_fock, ground_state_fock, lindblad_steady_state_fock, FockSolution,
};
pub use state::{covariance_from_state, negativity_fock, FockState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error(transparent)]
    Core(#[from] hopfield_core::Error),

    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("dimension {dim} exceeds the ceiling {ceiling}")]
    DimensionCeiling { dim: usize, ceiling: usize },

    #[error("truncation not converged at n_max = {n_max}: edge population {edge:e}, last change {change:e}")]
    TruncationEdge {
        n_max: usize,
        edge: f64,
        change: f64,
    },

    #[error("{solver} did not converge at n_max = {n_max}: residual {residual:e}")]
    NotConverged {
        solver: &'static str,
        n_max: usize,
        residual: f64,
    },

    #[error("unphysical density matrix: trace {trace}, min eigenvalue {min_eigenvalue:e}")]
    Unphysical { trace: f64, min_eigenvalue: f64 },
}

pub type Result<T, E = FockError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub struct FockConfig {
    /// Starting truncation per mode; each mode keeps `n_max + 1` levels.
    pub n_max: usize,
    /// Added to `n_max` on each growth step.
    pub growth_step: usize,
    /// Ceiling on the Hilbert-space dimension `(n_max + 1)²` for pure states.
    pub max_dimension: usize,
    /// Same for steady states, which store a dense `dim × dim` density matrix.
    pub max_steady_dimension: usize,
    /// Ground state: stop growing once `⟨a†a⟩` moves by less than this.
    pub convergence_tol: f64,
    /// Largest accepted population on the last kept level of either mode.
    pub edge_tol: f64,
    /// Largest accepted eigen- or generator residual.
    pub residual_tol: f64,
    pub gmres_restart: usize,
    pub gmres_max_iter: usize,
}

impl Default for FockConfig {
    fn default() -> Self {
        Self {
            n_max: 14,
            growth_step: 4,
            max_dimension: 41 * 41,
            max_steady_dimension: 23 * 23,
            convergence_tol: 1e-8,
            edge_tol: 1e-6,
            residual_tol: 1e-10,
            gmres_restart: 50,
            gmres_max_iter: 20_000,
        }
    }
}

impl FockConfig {
    pub fn with_n_max(n_max: usize) -> Self {
        Self {
            n_max,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 2 {
            return Err(FockError::InvalidConfig("n_max must be at least 2"));
        }
        if self.growth_step == 0 {
            return Err(FockError::InvalidConfig("growth_step must be positive"));
        }
        if self.gmres_restart == 0 {
            return Err(FockError::InvalidConfig("gmres_restart must be positive"));
        }
        let tols = [self.convergence_tol, self.edge_tol, self.residual_tol];
        if tols.iter().any(|t| t.is_nan() || *t <= 0.0) {
            return Err(FockError::InvalidConfig("tolerances must be positive"));
        }
        Ok(())
    }
}
