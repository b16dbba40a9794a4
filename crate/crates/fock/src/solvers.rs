//! Krylov solvers on complex vectors: Lanczos for the lowest eigenpair of a
//! Hermitian operator and restarted GMRES for general linear systems.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C64;

fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn norm(x: &[C64]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

fn axpy(a: C64, x: &[C64], y: &mut [C64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<C64>,
    /// `‖A v − λ v‖`.
    pub residual: f64,
}

/// Lowest eigenpair by Lanczos with full reorthogonalization, restarted
/// from the current Ritz vector until the residual drops below `tol`.
pub fn lanczos_lowest(
    apply: impl Fn(&[C64], &mut [C64]),
    start: &[C64],
    tol: f64,
    krylov_dim: usize,
    max_restarts: usize,
) -> Eigenpair {
    let n = start.len();
    let m_max = krylov_dim.min(n).max(1);
    let mut v0 = start.to_vec();
    let s = norm(&v0);
    v0.iter_mut().for_each(|x| *x /= s);
    let mut best = Eigenpair {
        value: f64::INFINITY,
        vector: v0.clone(),
        residual: f64::INFINITY,
    };
    let mut w = vec![C64::new(0.0, 0.0); n];
    for _ in 0..=max_restarts {
        let mut basis: Vec<Vec<C64>> = vec![v0.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        for j in 0..m_max {
            apply(&basis[j], &mut w);
            alpha.push(dot(&basis[j], &w).re);
            // Full reorthogonalization, twice for safety.
            for _ in 0..2 {
                for q in &basis {
                    let h = dot(q, &w);
                    axpy(-h, q, &mut w);
                }
            }
            let b = norm(&w);
            let converged_space = b < 1e-14 * alpha.iter().fold(1.0f64, |acc, a| acc.max(a.abs()));
            if converged_space || j + 1 == m_max {
                beta.push(b);
                break;
            }
            beta.push(b);
            basis.push(w.iter().map(|x| x / b).collect());
        }
        let k = alpha.len();
        let mut t = DMatrix::<f64>::zeros(k, k);
        for i in 0..k {
            t[(i, i)] = alpha[i];
            if i + 1 < k {
                t[(i, i + 1)] = beta[i];
                t[(i + 1, i)] = beta[i];
            }
        }
        let eig = SymmetricEigen::new(t);
        let (idx, &theta) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .expect("nonempty Krylov space");
        let coeffs = eig.eigenvectors.column(idx);
        let mut y = vec![C64::new(0.0, 0.0); n];
        for (q, c) in basis.iter().zip(coeffs.iter()) {
            axpy(C64::new(*c, 0.0), q, &mut y);
        }
        let s = norm(&y);
        y.iter_mut().for_each(|x| *x /= s);
        apply(&y, &mut w);
        let resid: Vec<C64> = w.iter().zip(&y).map(|(a, b)| a - b * theta).collect();
        let residual = norm(&resid);
        best = Eigenpair {
            value: theta,
            vector: y.clone(),
            residual,
        };
        if residual < tol {
            break;
        }
        v0 = y;
    }
    best
}

#[derive(Debug, Clone)]
pub struct GmresOutcome {
    pub iterations: usize,
    /// `‖b − A x‖ / ‖b‖` at exit.
    pub relative_residual: f64,
    pub converged: bool,
}

/// Restarted GMRES(m) with modified Gram-Schmidt and Givens rotations.
pub fn gmres(
    apply: impl Fn(&[C64], &mut [C64]),
    b: &[C64],
    x: &mut [C64],
    restart: usize,
    tol: f64,
    max_iter: usize,
) -> GmresOutcome {
    let n = b.len();
    let zero = C64::new(0.0, 0.0);
    let bnorm = norm(b).max(f64::MIN_POSITIVE);
    let mut ax = vec![zero; n];
    let mut iterations = 0;
    while iterations < max_iter {
        apply(x, &mut ax);
        let r: Vec<C64> = b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect();
        let beta = norm(&r);
        if beta / bnorm < tol {
            return GmresOutcome {
                iterations,
                relative_residual: beta / bnorm,
                converged: true,
            };
        }
        let mut v: Vec<Vec<C64>> = vec![r.iter().map(|ri| ri / beta).collect()];
        let mut h = vec![vec![zero; restart]; restart + 1];
        let mut cs = vec![0.0f64; restart];
        let mut sn = vec![zero; restart];
        let mut g = vec![zero; restart + 1];
        g[0] = C64::new(beta, 0.0);
        let mut cols = 0;
        for j in 0..restart {
            let mut w = vec![zero; n];
            apply(&v[j], &mut w);
            iterations += 1;
            for (i, vi) in v.iter().enumerate() {
                let hij = dot(vi, &w);
                h[i][j] = hij;
                axpy(-hij, vi, &mut w);
            }
            let wn = norm(&w);
            h[j + 1][j] = C64::new(wn, 0.0);
            for i in 0..j {
                let (a, bb) = (h[i][j], h[i + 1][j]);
                h[i][j] = cs[i] * a + sn[i] * bb;
                h[i + 1][j] = -sn[i].conj() * a + cs[i] * bb;
            }
            let (a, bb) = (h[j][j], h[j + 1][j]);
            let r = (a.norm_sqr() + bb.norm_sqr()).sqrt();
            if a.norm() == 0.0 {
                cs[j] = 0.0;
                sn[j] = C64::new(1.0, 0.0);
            } else {
                cs[j] = a.norm() / r;
                sn[j] = (a / a.norm()) * bb.conj() / r;
            }
            h[j][j] = cs[j] * a + sn[j] * bb;
            h[j + 1][j] = zero;
            g[j + 1] = -sn[j].conj() * g[j];
            g[j] *= cs[j];
            cols = j + 1;
            let rel = g[j + 1].norm() / bnorm;
            if wn == 0.0 || rel < tol || iterations >= max_iter {
                break;
            }
            v.push(w.iter().map(|wi| wi / wn).collect());
        }
        let mut y = vec![zero; cols];
        for i in (0..cols).rev() {
            let mut s = g[i];
            for k in (i + 1)..cols {
                s -= h[i][k] * y[k];
            }
            y[i] = s / h[i][i];
        }
        for (vi, yi) in v.iter().zip(&y) {
            axpy(*yi, vi, x);
        }
    }
    apply(x, &mut ax);
    let r: Vec<C64> = b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect();
    let final_rel = norm(&r) / bnorm;
    GmresOutcome {
        iterations,
        relative_residual: final_rel,
        converged: final_rel < tol,
    }
}
