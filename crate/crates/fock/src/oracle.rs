use hopfield_core::{
    build_quadratic_form, polariton_basis, rates, steady_moments, validate_stability, BathSpec,
    Error, ModeCoefficients, ModelParams, Term,
};
use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::solvers::{gmres, lanczos_lowest};
use crate::sparse::{ladder_operators, Csr};
use crate::state::{covariance_from_state, FockState};
use crate::{FockConfig, FockError, Result};

const LANCZOS_KRYLOV: usize = 80;
const LANCZOS_RESTARTS: usize = 60;

#[derive(Debug, Clone)]
pub struct FockSolution {
    pub state: FockState,
    pub covariance: Matrix4<f64>,
    /// `[⟨a†a⟩, ⟨b†b⟩]`.
    pub occupations: [f64; 2],
    pub edge_population: f64,
    /// Eigen-residual for ground states, generator residual for steady states.
    pub residual: f64,
    /// Ground-state energy, without the constants the Hamiltonian drops.
    pub energy: Option<f64>,
    /// Truncations tried, in order, ending with the accepted one.
    pub tried: Vec<usize>,
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn check_stable(params: &ModelParams) -> Result<()> {
    let report = validate_stability(&build_quadratic_form(params));
    if !report.stable {
        return Err(Error::Unstable {
            max_real: report.max_abs_real,
        }
        .into());
    }
    Ok(())
}

fn check_dimension(n_max: usize, ceiling: usize) -> Result<usize> {
    let dim = (n_max + 1).pow(2);
    if dim > ceiling {
        return Err(FockError::DimensionCeiling { dim, ceiling });
    }
    Ok(dim)
}

/// Sparse Hamiltonian of the configured variant at truncation `cfg.n_max`.
/// Constant offsets are dropped, so `D(a a† + a† a)` becomes `2D a†a`.
pub fn build_hamiltonian_fock(params: &ModelParams, cfg: &FockConfig) -> Result<Csr> {
    cfg.validate()?;
    check_stable(params)?;
    check_dimension(cfg.n_max, cfg.max_dimension)?;
    Ok(hamiltonian(params, cfg.n_max))
}

fn hamiltonian(params: &ModelParams, n_max: usize) -> Csr {
    let (a, b) = ladder_operators(n_max);
    let (ad, bd) = (a.adjoint(), b.adjoint());
    let (wa, wb, g) = (params.omega_a(), params.omega_b(), params.g());
    let d = params.diamagnetic();
    let ig = C64::new(0.0, g);
    let num_a = &ad * &a;
    let squeeze = &(&a * &a) + &(&ad * &ad);
    let mut h = Csr::zeros(a.dim());
    for term in params.variant().terms() {
        let piece = match term {
            Term::Free => &(&num_a * c(wa)) + &(&(&bd * &b) * c(wb)),
            Term::Resonant => &(&(&(&ad * &b) - &(&a * &bd)) * ig) + &(&num_a * c(2.0 * d)),
            Term::AntiResonant => &(&(&(&a * &b) - &(&ad * &bd)) * ig) + &(&squeeze * c(d)),
            Term::Interaction => &(&(&a + &ad) * &(&b - &bd)) * ig,
            Term::OneModeSqueeze => &squeeze * c(d),
            Term::PhaseRotation => &num_a * c(2.0 * d),
        };
        h = &h + &piece;
    }
    h
}

fn occupations(state: &FockState) -> [f64; 2] {
    let (a, b) = ladder_operators(state.n_max());
    [
        state.expectation(&(&a.adjoint() * &a)).re,
        state.expectation(&(&b.adjoint() * &b)).re,
    ]
}

/// Lowest eigenstate, grown in `cfg.growth_step` increments until `⟨a†a⟩`
/// settles within `cfg.convergence_tol` and the edge population is small.
pub fn ground_state_fock(params: &ModelParams, cfg: &FockConfig) -> Result<FockSolution> {
    cfg.validate()?;
    check_stable(params)?;
    let mut n_max = cfg.n_max;
    let mut tried = Vec::new();
    let mut previous: Option<f64> = None;
    loop {
        let dim = check_dimension(n_max, cfg.max_dimension)?;
        let h = hamiltonian(params, n_max);
        // The Hamiltonian conserves total-number parity and the ground state
        // lives in the even sector, which the vacuum seeds.
        let mut start = vec![c(0.0); dim];
        start[0] = c(1.0);
        let pair = lanczos_lowest(
            |x, y| h.matvec(x, y),
            &start,
            cfg.residual_tol,
            LANCZOS_KRYLOV,
            LANCZOS_RESTARTS,
        );
        tried.push(n_max);
        if pair.residual > cfg.residual_tol {
            return Err(FockError::NotConverged {
                solver: "lanczos",
                n_max,
                residual: pair.residual,
            });
        }
        let state = FockState::Pure {
            n_max,
            psi: pair.vector,
        };
        let occ = occupations(&state);
        let edge = state.edge_population();
        let change = previous.map_or(f64::INFINITY, |p| (occ[0] - p).abs());
        if change < cfg.convergence_tol && edge < cfg.edge_tol {
            return Ok(FockSolution {
                covariance: covariance_from_state(&state),
                occupations: occ,
                edge_population: edge,
                residual: pair.residual,
                energy: Some(pair.value),
                state,
                tried,
            });
        }
        previous = Some(occ[0]);
        let next = n_max + cfg.growth_step;
        if (next + 1).pow(2) > cfg.max_dimension {
            return Err(FockError::TruncationEdge {
                n_max,
                edge,
                change,
            });
        }
        n_max = next;
    }
}

/// `p = w a + x b + y a† + z b†`.
fn polariton_operator(m: &ModeCoefficients<f64>, a: &Csr, b: &Csr) -> Csr {
    let terms = [
        (m.w, a.clone()),
        (m.x, b.clone()),
        (m.y, a.adjoint()),
        (m.z, b.adjoint()),
    ];
    terms
        .iter()
        .fold(Csr::zeros(a.dim()), |acc, (coef, op)| &acc + &(op * *coef))
}

/// Jump operator with its rate and adjoint.
struct Channel {
    rate: f64,
    jump: Csr,
    jump_dag: Csr,
}

/// `Σ_k r_k (L_k ρ L_k† − ½{L_k† L_k, ρ})`, acting on row-major `ρ`.
struct Generator {
    dim: usize,
    channels: Vec<Channel>,
    /// `Σ_k r_k L_k† L_k`.
    decay: Csr,
}

impl Generator {
    fn apply(&self, rho: &[C64], out: &mut [C64]) {
        out.iter_mut().for_each(|o| *o = c(0.0));
        self.decay.left_mul_dense_acc(rho, out, c(-0.5));
        self.decay.right_mul_dense_acc(rho, out, c(-0.5));
        let mut tmp = vec![c(0.0); self.dim * self.dim];
        for ch in &self.channels {
            tmp.iter_mut().for_each(|t| *t = c(0.0));
            ch.jump.left_mul_dense_acc(rho, &mut tmp, c(ch.rate));
            ch.jump_dag.right_mul_dense_acc(&tmp, out, c(1.0));
        }
    }
}

/// Fixed point of the polariton-basis Lindblad generator
/// `Σ_j Γ(ω_j) D[p_j†] + Γ(−ω_j) D[p_j]`. The truncation grows until the
/// edge population drops below `cfg.edge_tol`.
pub fn lindblad_steady_state_fock(
    params: &ModelParams,
    bath: &BathSpec,
    cfg: &FockConfig,
) -> Result<FockSolution> {
    cfg.validate()?;
    check_stable(params)?;
    let basis = polariton_basis(params)?;
    let rate_set = rates(&basis, bath)?;
    steady_moments(&rate_set)?;
    let scale = rate_set
        .modes
        .iter()
        .map(|m| m.loss.max(m.gain))
        .fold(0.0, f64::max);

    let mut n_max = cfg.n_max;
    let mut tried = Vec::new();
    loop {
        let dim = check_dimension(n_max, cfg.max_steady_dimension)?;
        let (a, b) = ladder_operators(n_max);
        let mut channels = Vec::new();
        for (mode, r) in basis.modes().iter().zip(&rate_set.modes) {
            let p = polariton_operator(mode, &a, &b);
            let pd = p.adjoint();
            channels.push(Channel {
                rate: r.loss / scale,
                jump: p.clone(),
                jump_dag: pd.clone(),
            });
            channels.push(Channel {
                rate: r.gain / scale,
                jump: pd,
                jump_dag: p,
            });
        }
        channels.retain(|ch| ch.rate > 0.0);
        let decay = channels.iter().fold(Csr::zeros(dim), |acc, ch| {
            &acc + &(&(&ch.jump_dag * &ch.jump) * c(ch.rate))
        });
        let gen = Generator {
            dim,
            channels,
            decay,
        };

        // Replace the rank deficiency by the trace condition: solve
        // L(ρ) + e₀ Tr ρ = e₀, whose solution has Tr ρ = 1 and L(ρ) = 0.
        let apply = |x: &[C64], y: &mut [C64]| {
            gen.apply(x, y);
            y[0] += (0..dim).map(|i| x[i * dim + i]).sum::<C64>();
        };
        let mut rhs = vec![c(0.0); dim * dim];
        rhs[0] = c(1.0);
        let mut rho = vec![c(0.0); dim * dim];
        for i in 0..dim {
            rho[i * dim + i] = c(1.0 / dim as f64);
        }
        let outcome = gmres(
            apply,
            &rhs,
            &mut rho,
            cfg.gmres_restart,
            cfg.residual_tol * 0.1,
            cfg.gmres_max_iter,
        );
        tried.push(n_max);

        hermitize(&mut rho, dim);
        let mut lr = vec![c(0.0); dim * dim];
        gen.apply(&rho, &mut lr);
        let residual = lr.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if !outcome.converged || residual > cfg.residual_tol {
            return Err(FockError::NotConverged {
                solver: "gmres",
                n_max,
                residual: residual.max(outcome.relative_residual),
            });
        }
        let state = FockState::Mixed { n_max, rho };
        let edge = state.edge_population();
        if edge < cfg.edge_tol {
            state.validate()?;
            return Ok(FockSolution {
                covariance: covariance_from_state(&state),
                occupations: occupations(&state),
                edge_population: edge,
                residual,
                energy: None,
                state,
                tried,
            });
        }
        let next = n_max + cfg.growth_step;
        if (next + 1).pow(2) > cfg.max_steady_dimension {
            return Err(FockError::TruncationEdge {
                n_max,
                edge,
                change: f64::NAN,
            });
        }
        n_max = next;
    }
}

/// `ρ ← (ρ + ρ†) / (2 Tr ρ)`.
fn hermitize(rho: &mut [C64], dim: usize) {
    for i in 0..dim {
        for j in i..dim {
            let v = (rho[i * dim + j] + rho[j * dim + i].conj()) * 0.5;
            rho[i * dim + j] = v;
            rho[j * dim + i] = v.conj();
        }
    }
    let tr: f64 = (0..dim).map(|i| rho[i * dim + i].re).sum();
    rho.iter_mut().for_each(|x| *x /= tr);
}
