use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64 as C64;

use crate::sparse::{ladder_operators, Csr};
use crate::{FockError, Result};

/// A state on `(n_max + 1)²` levels, index `n_a (n_max + 1) + n_b`.
#[derive(Debug, Clone, PartialEq)]
pub enum FockState {
    Pure {
        n_max: usize,
        psi: Vec<C64>,
    },
    /// Row-major density matrix.
    Mixed {
        n_max: usize,
        rho: Vec<C64>,
    },
}

impl FockState {
    pub fn n_max(&self) -> usize {
        match self {
            FockState::Pure { n_max, .. } | FockState::Mixed { n_max, .. } => *n_max,
        }
    }

    pub fn dim(&self) -> usize {
        (self.n_max() + 1).pow(2)
    }

    pub fn vacuum(n_max: usize) -> Self {
        let mut psi = vec![C64::new(0.0, 0.0); (n_max + 1).pow(2)];
        psi[0] = C64::new(1.0, 0.0);
        FockState::Pure { n_max, psi }
    }

    pub fn expectation(&self, op: &Csr) -> C64 {
        match self {
            FockState::Pure { psi, .. } => op.expectation(psi),
            FockState::Mixed { rho, .. } => op.trace_with(rho),
        }
    }

    pub fn population(&self, i: usize) -> f64 {
        match self {
            FockState::Pure { psi, .. } => psi[i].norm_sqr(),
            FockState::Mixed { rho, .. } => rho[i * self.dim() + i].re,
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.population(i)).sum()
    }

    /// Total population on the highest kept level of either mode.
    pub fn edge_population(&self) -> f64 {
        let n = self.n_max() + 1;
        (0..self.dim())
            .filter(|i| i / n == n - 1 || i % n == n - 1)
            .map(|i| self.population(i))
            .sum()
    }

    pub fn density_matrix(&self) -> DMatrix<C64> {
        let d = self.dim();
        match self {
            FockState::Pure { psi, .. } => DMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj()),
            FockState::Mixed { rho, .. } => DMatrix::from_row_slice(d, d, rho),
        }
    }

    /// Trace within 1e-10 of one and no eigenvalue below −1e-9.
    pub fn validate(&self) -> Result<()> {
        let trace = self.trace();
        let min_eigenvalue = match self {
            FockState::Pure { .. } => 0.0,
            FockState::Mixed { .. } => self
                .density_matrix()
                .symmetric_eigenvalues()
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min),
        };
        if (trace - 1.0).abs() > 1e-10 || min_eigenvalue < -1e-9 {
            return Err(FockError::Unphysical {
                trace,
                min_eigenvalue,
            });
        }
        Ok(())
    }
}

/// Quadrature covariance in `(X_a, P_a, X_b, P_b)` order from first and
/// second moments. Only normally ordered moments are evaluated, so the
/// truncation never enters through `[a, a†]`.
pub fn covariance_from_state(state: &FockState) -> Matrix4<f64> {
    let (a, b) = ladder_operators(state.n_max());
    let ev = |op: &Csr| state.expectation(op);
    let (ma, mb) = (ev(&a), ev(&b));
    let ad = a.adjoint();
    let bd = b.adjoint();
    let n_a = ev(&(&ad * &a)).re - ma.norm_sqr();
    let n_b = ev(&(&bd * &b)).re - mb.norm_sqr();
    let sq_a = ev(&(&a * &a)) - ma * ma;
    let sq_b = ev(&(&b * &b)) - mb * mb;
    let k = ev(&(&a * &b)) - ma * mb;
    let l = ev(&(&ad * &b)) - ma.conj() * mb;

    let block = |n: f64, m: C64| (n + 0.5 + m.re, m.im, n + 0.5 - m.re);
    let (xx_a, xp_a, pp_a) = block(n_a, sq_a);
    let (xx_b, xp_b, pp_b) = block(n_b, sq_b);
    let xa_xb = k.re + l.re;
    let xa_pb = k.im + l.im;
    let pa_xb = k.im - l.im;
    let pa_pb = l.re - k.re;
    #[rustfmt::skip]
    let sigma = Matrix4::new(
        xx_a,  xp_a,  xa_xb, xa_pb,
        xp_a,  pp_a,  pa_xb, pa_pb,
        xa_xb, pa_xb, xx_b,  xp_b,
        xa_pb, pa_pb, xp_b,  pp_b,
    );
    sigma
}

/// `ln ‖ρ^{T_B}‖₁`. Pure states go through the Schmidt coefficients.
pub fn negativity_fock(state: &FockState) -> f64 {
    let n = state.n_max() + 1;
    let trace_norm = match state {
        FockState::Pure { psi, .. } => {
            let c = DMatrix::from_row_slice(n, n, psi);
            c.singular_values().sum().powi(2)
        }
        FockState::Mixed { rho, .. } => {
            let d = n * n;
            // ρ^{T_B}[(i_a i_b), (j_a j_b)] = ρ[(i_a j_b), (j_a i_b)]
            let pt = DMatrix::from_fn(d, d, |r, c| {
                let (ia, ib) = (r / n, r % n);
                let (ja, jb) = (c / n, c % n);
                rho[(ia * n + jb) * d + ja * n + ib]
            });
            pt.symmetric_eigenvalues().iter().map(|v| v.abs()).sum()
        }
    };
    trace_norm.ln().max(0.0)
}
