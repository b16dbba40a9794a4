//! Minimal complex CSR matrices: enough algebra to assemble quadratic
//! Hamiltonians and Lindblad generators from ladder operators.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64 as C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Csr {
    dim: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<C64>,
}

impl Csr {
    /// Sums duplicate entries and drops exact zeros.
    pub fn from_triplets(
        dim: usize,
        triplets: impl IntoIterator<Item = (usize, usize, C64)>,
    ) -> Self {
        let mut rows: Vec<BTreeMap<usize, C64>> = vec![BTreeMap::new(); dim];
        for (r, c, v) in triplets {
            *rows[r].entry(c).or_default() += v;
        }
        let mut indptr = Vec::with_capacity(dim + 1);
        let mut indices = Vec::new();
        let mut values = Vec::new();
        indptr.push(0);
        for row in rows {
            for (c, v) in row {
                if v != C64::new(0.0, 0.0) {
                    indices.push(c);
                    values.push(v);
                }
            }
            indptr.push(indices.len());
        }
        Self {
            dim,
            indptr,
            indices,
            values,
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_triplets(dim, std::iter::empty())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_triplets(dim, (0..dim).map(|i| (i, i, C64::new(1.0, 0.0))))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, C64)> + '_ {
        let span = self.indptr[r]..self.indptr[r + 1];
        self.indices[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.dim).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.row(r)
            .find(|&(j, _)| j == c)
            .map_or(C64::new(0.0, 0.0), |(_, v)| v)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (c, r, v.conj())))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (r, c, v * s)))
    }

    /// `max |A − A†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.adjoint();
        (self - &adj)
            .values
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn matvec(&self, x: &[C64], y: &mut [C64]) {
        for (r, out) in y.iter_mut().enumerate() {
            *out = self.row(r).map(|(c, v)| v * x[c]).sum();
        }
    }

    /// `⟨x|A|x⟩`.
    pub fn expectation(&self, x: &[C64]) -> C64 {
        (0..self.dim)
            .map(|r| x[r].conj() * self.row(r).map(|(c, v)| v * x[c]).sum::<C64>())
            .sum()
    }

    /// `Tr(ρ A)` for a dense row-major `ρ`.
    pub fn trace_with(&self, rho: &[C64]) -> C64 {
        self.triplets()
            .map(|(r, c, v)| v * rho[c * self.dim + r])
            .sum()
    }

    /// `out += s · A R` for a dense row-major `R`.
    pub fn left_mul_dense_acc(&self, r_mat: &[C64], out: &mut [C64], s: C64) {
        let d = self.dim;
        for i in 0..d {
            let dst = &mut out[i * d..(i + 1) * d];
            for (k, v) in self.row(i) {
                let f = s * v;
                let src = &r_mat[k * d..(k + 1) * d];
                for (o, x) in dst.iter_mut().zip(src) {
                    *o += f * x;
                }
            }
        }
    }

    /// `out += s · R A` for a dense row-major `R`.
    pub fn right_mul_dense_acc(&self, r_mat: &[C64], out: &mut [C64], s: C64) {
        let d = self.dim;
        for i in 0..d {
            let src = &r_mat[i * d..(i + 1) * d];
            let dst = &mut out[i * d..(i + 1) * d];
            for (k, &x) in src.iter().enumerate() {
                if x == C64::new(0.0, 0.0) {
                    continue;
                }
                let f = s * x;
                for (j, v) in self.row(k) {
                    dst[j] += f * v;
                }
            }
        }
    }
}

impl Add for &Csr {
    type Output = Csr;
    fn add(self, rhs: &Csr) -> Csr {
        Csr::from_triplets(self.dim, self.triplets().chain(rhs.triplets()))
    }
}

impl Sub for &Csr {
    type Output = Csr;
    fn sub(self, rhs: &Csr) -> Csr {
        Csr::from_triplets(
            self.dim,
            self.triplets()
                .chain(rhs.triplets().map(|(r, c, v)| (r, c, -v))),
        )
    }
}

impl Mul for &Csr {
    type Output = Csr;
    fn mul(self, rhs: &Csr) -> Csr {
        let triplets = (0..self.dim).flat_map(|r| {
            self.row(r)
                .flat_map(move |(k, a)| rhs.row(k).map(move |(c, b)| (r, c, a * b)))
                .collect::<Vec<_>>()
        });
        Csr::from_triplets(self.dim, triplets)
    }
}

impl Mul<C64> for &Csr {
    type Output = Csr;
    fn mul(self, s: C64) -> Csr {
        self.scale(s)
    }
}

/// Ladder operators `a ⊗ I` and `I ⊗ b` on `(n_max + 1)²` states, index
/// `n_a (n_max + 1) + n_b`.
pub fn ladder_operators(n_max: usize) -> (Csr, Csr) {
    let n = n_max + 1;
    let dim = n * n;
    let idx = |na: usize, nb: usize| na * n + nb;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for na in 0..n {
        for nb in 0..n {
            if na > 0 {
                a.push((
                    idx(na - 1, nb),
                    idx(na, nb),
                    C64::new((na as f64).sqrt(), 0.0),
                ));
            }
            if nb > 0 {
                b.push((
                    idx(na, nb - 1),
                    idx(na, nb),
                    C64::new((nb as f64).sqrt(), 0.0),
                ));
            }
        }
    }
    (Csr::from_triplets(dim, a), Csr::from_triplets(dim, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_away_from_the_edge() {
        let (a, b) = ladder_operators(4);
        let comm = &(&a * &a.adjoint()) - &(&a.adjoint() * &a);
        // [a, a†] = 1 except on the last photon level.
        for na in 0..4 {
            let i = na * 5 + 2;
            assert!((comm.get(i, i) - C64::new(1.0, 0.0)).norm() < 1e-14);
        }
        let ab = &(&a * &b) - &(&b * &a);
        assert_eq!(ab.nnz(), 0);
    }

    #[test]
    fn dense_products_match_sparse_products() {
        let (a, b) = ladder_operators(3);
        let d = a.dim();
        let op = &(&a * &b.adjoint()) + &b.scale(C64::new(0.0, 2.0));
        let dense: Vec<C64> = (0..d * d)
            .map(|k| C64::new((k % 7) as f64, (k % 3) as f64))
            .collect();
        let as_csr = Csr::from_triplets(d, (0..d * d).map(|k| (k / d, k % d, dense[k])));
        let mut left = vec![C64::new(0.0, 0.0); d * d];
        op.left_mul_dense_acc(&dense, &mut left, C64::new(1.0, 0.0));
        let want = &op * &as_csr;
        let mut right = vec![C64::new(0.0, 0.0); d * d];
        op.right_mul_dense_acc(&dense, &mut right, C64::new(1.0, 0.0));
        let want_r = &as_csr * &op;
        for i in 0..d {
            for j in 0..d {
                assert!((left[i * d + j] - want.get(i, j)).norm() < 1e-12);
                assert!((right[i * d + j] - want_r.get(i, j)).norm() < 1e-12);
            }
        }
    }
}
