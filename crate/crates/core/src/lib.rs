//! Gaussian-state coherence and entanglement of two coupled bosonic modes
//! (a cavity photon `a` and a matter excitation `b`) described by the
//! Hopfield Hamiltonian, in its ground state and in the steady state of a
//! global Lindblad equation with two thermal reservoirs.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`.

// `!(x > 0.0)` guards are deliberate: they reject NaN along with bad values.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_is_multiple_of)]

pub mod bogoliubov;
pub mod dissipation;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod model;
pub mod scalar;

pub use bogoliubov::{
    bare_coefficients, bare_transform, diagonalize_general, dicke_frequencies, dicke_solution,
    hopfield_coefficients, hopfield_frequencies, normal_mode_frequencies, polariton_basis,
    ModeCoefficients,
};
pub use dissipation::{
    evolve_moments, ground_state_closed_form, ground_state_covariance, moment_derivatives, rates,
    secular_validity, steady_moments, steady_polariton_covariance, thermal_bare_covariance,
    thermal_closed_form, thermal_occupation, BasisTag, MomentVector,
};
pub use error::{Error, Result};
pub use measures::{
    coherence_report, entropy_kernel, log_negativity, mean_occupations, occupation_closed_form,
    one_mode_coherence, symplectic_eigenvalues, symplectic_spectrum, two_mode_coherence, StateSpec,
};
pub use model::{build_quadratic_form, validate_stability, Term, Variant};
pub use scalar::Real;

pub type ModelParams = model::ModelParams<f64>;
pub type QuadraticForm = model::QuadraticForm<f64>;
pub type StabilityReport = model::StabilityReport<f64>;
pub type PolaritonBasis = bogoliubov::PolaritonBasis<f64>;
pub type BareBasisCoefficients = bogoliubov::BareBasisCoefficients<f64>;
pub type BathSpec = dissipation::BathSpec<f64>;
pub type RateSet = dissipation::RateSet<f64>;
pub type CovarianceState = dissipation::CovarianceState<f64>;
pub type CoherenceReport = measures::CoherenceReport<f64>;
