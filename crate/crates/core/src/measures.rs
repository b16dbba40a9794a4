//! Entropic coherence, occupations and logarithmic negativity of zero-mean
//! two-mode Gaussian states. All logarithms are natural.

use nalgebra::{Matrix2, Matrix4};

use crate::bogoliubov::{
    bare_coefficients, normal_mode_frequencies, polariton_basis, PolaritonBasis,
};
use crate::dissipation::{
    ground_state_covariance, secular_validity, thermal_from_basis, BathSpec, CovarianceState,
};
use crate::error::{Error, Result};
use crate::linalg::{cholesky4, det2, det4, symmetric_eigenvalues4, symplectic_form};
use crate::model::{build_quadratic_form, ModelParams};
use crate::scalar::Real;

fn clamp_half<T: Real>(x: T) -> Result<T> {
    if x < T::half() - T::PHYSICALITY_TOL || x.is_nan() {
        return Err(Error::UnphysicalEigenvalue { value: x.as_f64() });
    }
    Ok(x.max(T::half()))
}

/// `f(x) = (x + ½) ln(x + ½) − (x − ½) ln(x − ½)`, with `f(½) = 0`.
pub fn entropy_kernel<T: Real>(x: T) -> Result<T> {
    let x = clamp_half(x)?;
    let h = T::half();
    // Excesses at rounding level are pure states, not tiny entropies.
    if x - h <= T::epsilon() * T::lit(64.0) {
        return Ok(T::zero());
    }
    Ok((x + h) * (x + h).ln() - (x - h) * (x - h).ln())
}

/// Symplectic eigenvalues `(v1, v2)`, `v1 ≥ v2`, of a positive-definite
/// matrix.
///
/// With `σ = L Lᵀ`, the matrix `Lᵀ Ω L` is antisymmetric and similar to
/// `Ω σ`; its squared singular values `v_l²` come from a symmetric
/// eigenproblem, which stays accurate near pure states where the
/// invariant-based formula loses half the digits.
pub fn symplectic_spectrum<T: Real>(sigma: &Matrix4<T>) -> Result<(T, T)> {
    let l = cholesky4(sigma).ok_or(Error::NotPositiveDefinite)?;
    let b = l.transpose() * symplectic_form::<T>() * l;
    let ev = symmetric_eigenvalues4(&(b.transpose() * b));
    let v2 = ((ev[0] + ev[1]) * T::half()).max(T::zero()).sqrt();
    let v1 = ((ev[2] + ev[3]) * T::half()).max(T::zero()).sqrt();
    Ok((v1, v2))
}

pub fn symplectic_eigenvalues<T: Real>(state: &CovarianceState<T>) -> Result<(T, T)> {
    symplectic_spectrum(state.sigma())
}

/// `C_n = f(μ_n + ½) − f(v_n)` for one mode with covariance `block` and
/// first moments `displacement`.
pub fn one_mode_coherence<T: Real>(block: &Matrix2<T>, displacement: [T; 2]) -> Result<T> {
    let det = det2(block);
    let v = det.max(T::zero()).sqrt();
    let mu =
        (block.trace() + displacement[0].powi(2) + displacement[1].powi(2) - T::one()) * T::half();
    let c = entropy_kernel(mu + T::half())? - entropy_kernel(v)?;
    Ok(c.max(T::zero()))
}

/// `C_tot = Σ_n f(μ_n + ½) − Σ_l f(v_l)`.
pub fn two_mode_coherence<T: Real>(sigma: &Matrix4<T>, displacement: [T; 4]) -> Result<T> {
    let (v1, v2) = symplectic_spectrum(sigma)?;
    let (mu_a, mu_b) = occupations_with_displacement(sigma, displacement);
    let reference = entropy_kernel(mu_a + T::half())? + entropy_kernel(mu_b + T::half())?;
    let own = entropy_kernel(v1)? + entropy_kernel(v2)?;
    Ok((reference - own).max(T::zero()))
}

fn occupations_with_displacement<T: Real>(sigma: &Matrix4<T>, d: [T; 4]) -> (T, T) {
    let h = T::half();
    let mu_a = (sigma[(0, 0)] + sigma[(1, 1)] + d[0] * d[0] + d[1] * d[1] - T::one()) * h;
    let mu_b = (sigma[(2, 2)] + sigma[(3, 3)] + d[2] * d[2] + d[3] * d[3] - T::one()) * h;
    (mu_a.max(T::zero()), mu_b.max(T::zero()))
}

/// `(⟨a†a⟩, ⟨b†b⟩) = ((Tr σ_a − 1)/2, (Tr σ_b − 1)/2)`.
pub fn mean_occupations<T: Real>(sigma: &Matrix4<T>) -> (T, T) {
    occupations_with_displacement(sigma, [T::zero(); 4])
}

/// Occupations from the polariton coefficients and polariton occupations
/// `⟨p_j†p_j⟩`: `μ_a = Σ_j (|w_j|² + |y_j|²)⟨p_j†p_j⟩ + |y_j|²`, likewise
/// for `b` with `x_j, z_j`.
pub fn occupations_from_coefficients<T: Real>(
    basis: &PolaritonBasis<T>,
    occupation: [T; 2],
) -> (T, T) {
    let mut mu = (T::zero(), T::zero());
    for (m, &n) in basis.modes().iter().zip(occupation.iter()) {
        let (w2, x2, y2, z2) = (
            m.w.norm_sqr(),
            m.x.norm_sqr(),
            m.y.norm_sqr(),
            m.z.norm_sqr(),
        );
        mu.0 += (w2 + y2) * n + y2;
        mu.1 += (x2 + z2) * n + z2;
    }
    mu
}

/// The compact ground-state expression `g² ω_a (τ_-/ω_- + τ_+/ω_+)`.
///
/// It does not equal `Σ_j |y_j|²`: at `η_a = g = 1` it gives `1/√2` where
/// the covariance (and a Fock-space diagonalization) gives `(√2 − 1)/2`.
/// Kept so the two can be compared; use [`mean_occupations`] for physics.
pub fn occupation_closed_form<T: Real>(params: &ModelParams<T>) -> Result<T> {
    let c = bare_coefficients(params)?;
    let sum = c.tau[0] / c.omega[0] + c.tau[1] / c.omega[1];
    Ok(params.g() * params.g() * params.omega_a() * sum)
}

/// Smallest symplectic eigenvalue of the partial transpose,
/// `d̃_-² = (Δ − √(Δ² − 4 det σ))/2`, `Δ = det σ_a + det σ_b − 2 det σ_ab`.
pub fn partial_transpose_eigenvalue<T: Real>(sigma: &Matrix4<T>) -> T {
    // Flipping P_b is a congruence, so the transposed matrix stays positive
    // definite and the Cholesky route applies. It keeps full accuracy at
    // separable points, where the invariant formula's square root of a
    // vanishing discriminant costs half the digits.
    let mut flipped = *sigma;
    for k in 0..3 {
        flipped[(k, 3)] = -flipped[(k, 3)];
        flipped[(3, k)] = -flipped[(3, k)];
    }
    if let Ok((_, low)) = symplectic_spectrum(&flipped) {
        return low;
    }
    let block = |r: usize, c: usize| sigma.fixed_view::<2, 2>(r, c).into_owned();
    let delta = det2(&block(0, 0)) + det2(&block(2, 2)) - T::two() * det2(&block(0, 2));
    let det = det4(sigma);
    let root = (delta * delta - T::lit(4.0) * det).max(T::zero()).sqrt();
    let upper = (delta + root) * T::half();
    if upper > T::zero() {
        (det / upper).max(T::zero()).sqrt()
    } else {
        T::zero()
    }
}

/// `E_N = max(0, −ln 2d̃_-)`. Like the symplectic eigenvalues themselves,
/// `d̃_-` within the physicality tolerance below ½ counts as ½.
pub fn log_negativity<T: Real>(sigma: &Matrix4<T>) -> T {
    let d = partial_transpose_eigenvalue(sigma);
    if d >= T::half() - T::PHYSICALITY_TOL {
        return T::zero();
    }
    -(T::two() * d).ln()
}

/// Which state a report is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec<T> {
    Ground,
    Thermal(BathSpec<T>),
}

/// Every measure for one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceReport<T> {
    pub c_a: T,
    pub c_b: T,
    pub c_tot: T,
    pub mu_a: T,
    pub mu_b: T,
    pub v1: T,
    pub v2: T,
    /// `√det σ_a`, the symplectic eigenvalue of the photon alone.
    pub v_a: T,
    pub v_b: T,
    /// `S(ρ) = Σ_l f(v_l)`.
    pub entropy: T,
    /// `S(ρ_th) = Σ_n f(μ_n + ½)`.
    pub entropy_reference: T,
    pub log_negativity: T,
    pub omega_plus: T,
    pub omega_minus: T,
    /// Splitting over damping; infinite for the ground state.
    pub secular_ratio: T,
    pub secular_ok: bool,
}

/// Builds the covariance for `state` and evaluates every measure on it.
pub fn coherence_report<T: Real>(
    params: &ModelParams<T>,
    state: &StateSpec<T>,
) -> Result<CoherenceReport<T>> {
    let (sigma, (omega_plus, omega_minus), secular) = match state {
        StateSpec::Ground => {
            let freqs = normal_mode_frequencies(&build_quadratic_form(params))?;
            let sigma = ground_state_covariance(params)?;
            (sigma, freqs, (T::infinity(), true))
        }
        StateSpec::Thermal(bath) => {
            let basis = polariton_basis(params)?;
            let sigma = thermal_from_basis(&basis, bath)?;
            let sec = secular_validity(&basis, bath);
            (
                sigma,
                (basis.omega_plus(), basis.omega_minus()),
                (sec.ratio, sec.ok),
            )
        }
    };
    report_for_covariance(&sigma, omega_plus, omega_minus, secular)
}

fn report_for_covariance<T: Real>(
    state: &CovarianceState<T>,
    omega_plus: T,
    omega_minus: T,
    (secular_ratio, secular_ok): (T, bool),
) -> Result<CoherenceReport<T>> {
    let sigma = state.sigma();
    let (v1, v2) = symplectic_spectrum(sigma)?;
    let (mu_a, mu_b) = mean_occupations(sigma);
    let (a, b) = (state.block_a(), state.block_b());
    let entropy = entropy_kernel(v1)? + entropy_kernel(v2)?;
    let entropy_reference = entropy_kernel(mu_a + T::half())? + entropy_kernel(mu_b + T::half())?;
    Ok(CoherenceReport {
        c_a: one_mode_coherence(&a, [T::zero(); 2])?,
        c_b: one_mode_coherence(&b, [T::zero(); 2])?,
        c_tot: (entropy_reference - entropy).max(T::zero()),
        mu_a,
        mu_b,
        v1: v1.max(T::half()),
        v2: v2.max(T::half()),
        v_a: det2(&a).max(T::zero()).sqrt(),
        v_b: det2(&b).max(T::zero()).sqrt(),
        entropy,
        entropy_reference,
        log_negativity: log_negativity(sigma),
        omega_plus,
        omega_minus,
        secular_ratio,
        secular_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bogoliubov::hopfield_coefficients;
    use crate::dissipation::{thermal_bare_covariance, thermal_occupation};
    use crate::model::Variant;
    use approx::assert_relative_eq;

    fn hop(wa: f64, g: f64) -> ModelParams<f64> {
        ModelParams::new(wa, 1.0, g, Variant::FullHopfield).unwrap()
    }

    #[test]
    fn kernel_values() {
        assert_eq!(entropy_kernel(0.5).unwrap(), 0.0);
        assert_relative_eq!(
            entropy_kernel(1.5).unwrap(),
            2.0 * 2f64.ln(),
            epsilon = 1e-15
        );
        assert!(matches!(
            entropy_kernel(0.4),
            Err(Error::UnphysicalEigenvalue { .. })
        ));
        assert_eq!(entropy_kernel(0.5 - 1e-10).unwrap(), 0.0);
        assert!(entropy_kernel(0.5 - 1e-8).is_err());
    }

    #[test]
    fn symplectic_spectrum_examples() {
        let (v1, v2) = symplectic_spectrum(&(Matrix4::<f64>::identity() * 0.5)).unwrap();
        assert_relative_eq!(v1, 0.5, epsilon = 1e-15);
        assert_relative_eq!(v2, 0.5, epsilon = 1e-15);
        let d = Matrix4::from_diagonal(&nalgebra::Vector4::new(0.9, 0.9, 2.5, 2.5));
        let (v1, v2) = symplectic_spectrum(&d).unwrap();
        assert_relative_eq!(v1, 2.5, epsilon = 1e-14);
        assert_relative_eq!(v2, 0.9, epsilon = 1e-14);
        let gs = ground_state_covariance(&hop(0.4, 2.7)).unwrap();
        let (v1, v2) = symplectic_spectrum(gs.sigma()).unwrap();
        assert!((v1 - 0.5).abs() < 1e-12 && (v2 - 0.5).abs() < 1e-12);
        assert!(matches!(
            symplectic_spectrum(&(-Matrix4::<f64>::identity())),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn incoherent_single_modes() {
        let th = Matrix2::new(1.7, 0.0, 0.0, 1.7);
        assert_eq!(one_mode_coherence(&th, [0.0; 2]).unwrap(), 0.0);
        let vac = Matrix2::identity() * 0.5;
        assert_eq!(one_mode_coherence(&vac, [0.0; 2]).unwrap(), 0.0);
        let squeezed = Matrix2::new(1.0, 0.0, 0.0, 0.25);
        assert!(one_mode_coherence(&squeezed, [0.0; 2]).unwrap() > 0.0);
        assert!(one_mode_coherence(&vac, [1.0, 0.0]).unwrap() > 0.0);
    }

    #[test]
    fn decoupled_thermal_state_has_no_coherence() {
        let params = hop(0.6, 0.0);
        let s = thermal_bare_covariance(&params, &BathSpec::equilibrium(1e-3, 1e-3, 0.8).unwrap())
            .unwrap();
        assert!(two_mode_coherence(s.sigma(), [0.0; 4]).unwrap() < 1e-14);
    }

    #[test]
    fn ground_state_total_coherence_is_reference_entropy() {
        let s = ground_state_covariance(&hop(1.0, 1.0)).unwrap();
        let (mu_a, mu_b) = mean_occupations(s.sigma());
        let want = entropy_kernel(mu_a + 0.5).unwrap() + entropy_kernel(mu_b + 0.5).unwrap();
        assert_relative_eq!(
            two_mode_coherence(s.sigma(), [0.0; 4]).unwrap(),
            want,
            epsilon = 1e-12
        );
    }

    #[test]
    fn resonant_deep_strong_occupation() {
        // Σ_j |y_j|² = (√2 − 1)/2 at η_a = 1, g = 1.
        let s = ground_state_covariance(&hop(1.0, 1.0)).unwrap();
        let (mu_a, mu_b) = mean_occupations(s.sigma());
        let want = (2f64.sqrt() - 1.0) / 2.0;
        assert_relative_eq!(mu_a, want, epsilon = 1e-12);
        assert_relative_eq!(mu_b, want, epsilon = 1e-12);
        assert_relative_eq!(mu_a, 0.20711, epsilon = 1e-5);
        let basis = hopfield_coefficients(&hop(1.0, 1.0)).unwrap();
        let (ca, cb) = occupations_from_coefficients(&basis, [0.0, 0.0]);
        assert_relative_eq!(ca, want, epsilon = 1e-12);
        assert_relative_eq!(cb, want, epsilon = 1e-12);
        let closed = occupation_closed_form(&hop(1.0, 1.0)).unwrap();
        assert_relative_eq!(closed, 0.5f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn thermal_occupations_match_coefficient_formula() {
        let params = hop(1.3, 0.8);
        let basis = hopfield_coefficients(&params).unwrap();
        let s = thermal_bare_covariance(&params, &BathSpec::equilibrium(1e-3, 1e-3, 0.7).unwrap())
            .unwrap();
        let n = basis.omegas().map(|w| thermal_occupation(w, 0.7).unwrap());
        let (a, b) = occupations_from_coefficients(&basis, n);
        let (ma, mb) = mean_occupations(s.sigma());
        assert_relative_eq!(a, ma, epsilon = 1e-12);
        assert_relative_eq!(b, mb, epsilon = 1e-12);
    }

    #[test]
    fn negativity_examples() {
        assert_eq!(log_negativity(&(Matrix4::<f64>::identity() * 0.5)), 0.0);
        let gs = ground_state_covariance(&hop(1.0, 1.0)).unwrap();
        let e = log_negativity(gs.sigma());
        assert_relative_eq!(e, 0.65848, epsilon = 1e-5);
        // Same value from the Williamson spectrum of the transposed state.
        let mut flip = Matrix4::identity();
        flip[(3, 3)] = -1.0;
        let (_, d) = symplectic_spectrum(&(flip * gs.sigma() * flip)).unwrap();
        assert_relative_eq!(e, -(2.0 * d).ln(), epsilon = 1e-12);
    }

    #[test]
    fn passive_variant_never_entangles() {
        for &g in &[0.1, 0.5, 1.0, 2.0] {
            let params = ModelParams::new(1.0, 1.0, g, Variant::NoAnti).unwrap();
            for &t in &[0.0, 0.5, 2.0] {
                let r = coherence_report(
                    &params,
                    &StateSpec::Thermal(BathSpec::equilibrium(1e-3, 1e-3, t).unwrap()),
                )
                .unwrap();
                assert_eq!(r.log_negativity, 0.0);
            }
        }
    }

    #[test]
    fn report_examples() {
        let r = coherence_report(&hop(1.0, 0.0), &StateSpec::Ground).unwrap();
        assert_eq!(
            (r.c_a, r.c_b, r.c_tot, r.log_negativity),
            (0.0, 0.0, 0.0, 0.0)
        );
        assert_relative_eq!(r.v1, 0.5, epsilon = 1e-15);
        assert_relative_eq!(r.v2, 0.5, epsilon = 1e-15);

        let r = coherence_report(&hop(1.0, 1.0), &StateSpec::Ground).unwrap();
        assert_relative_eq!(r.c_a, r.c_b, epsilon = 1e-12);
        assert!(r.c_tot >= r.c_a.max(r.c_b) && r.c_a > 0.0);
        assert!(r.secular_ok);

        let r = coherence_report(
            &hop(1.0, 2.0),
            &StateSpec::Thermal(BathSpec::equilibrium(1e-3, 1e-3, 1.0).unwrap()),
        )
        .unwrap();
        assert!(r.c_b > r.c_a);
    }

    #[test]
    fn label_exchange_symmetry() {
        let params = hop(1.0, 0.9);
        let bath = BathSpec::equilibrium(2e-3, 2e-3, 0.6).unwrap();
        let r = coherence_report(&params, &StateSpec::Thermal(bath)).unwrap();
        let swapped = BathSpec::new(bath.kappa, bath.gamma, bath.t_b, bath.t_a).unwrap();
        let s = coherence_report(&params, &StateSpec::Thermal(swapped)).unwrap();
        assert_relative_eq!(r.c_tot, s.c_tot, epsilon = 1e-12);
        assert_relative_eq!(r.log_negativity, s.log_negativity, epsilon = 1e-12);
    }
}
