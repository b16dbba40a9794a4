//! Small dense helpers for 2×2 and 4×4 phase-space matrices.
//!
//! Everything here is generic over [`Real`], which rules out the
//! `RealField`-based decompositions in nalgebra; the handful that are needed
//! are written out for the fixed sizes used by a two-mode system.

use nalgebra::{Matrix2, Matrix4};

use crate::scalar::Real;

/// Symplectic form for the quadrature ordering `(X_a, P_a, X_b, P_b)`.
pub fn symplectic_form<T: Real>() -> Matrix4<T> {
    let (o, l) = (T::zero(), T::one());
    Matrix4::new(
        o, l, o, o, //
        -l, o, o, o, //
        o, o, o, l, //
        o, o, -l, o,
    )
}

pub fn det2<T: Real>(m: &Matrix2<T>) -> T {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Determinant by expansion in complementary 2×2 minors.
pub fn det4<T: Real>(m: &Matrix4<T>) -> T {
    let a = |i: usize, j: usize| m[(i, j)];
    let s0 = a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);
    let s1 = a(0, 0) * a(1, 2) - a(1, 0) * a(0, 2);
    let s2 = a(0, 0) * a(1, 3) - a(1, 0) * a(0, 3);
    let s3 = a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2);
    let s4 = a(0, 1) * a(1, 3) - a(1, 1) * a(0, 3);
    let s5 = a(0, 2) * a(1, 3) - a(1, 2) * a(0, 3);
    let c5 = a(2, 2) * a(3, 3) - a(3, 2) * a(2, 3);
    let c4 = a(2, 1) * a(3, 3) - a(3, 1) * a(2, 3);
    let c3 = a(2, 1) * a(3, 2) - a(3, 1) * a(2, 2);
    let c2 = a(2, 0) * a(3, 3) - a(3, 0) * a(2, 3);
    let c1 = a(2, 0) * a(3, 2) - a(3, 0) * a(2, 2);
    let c0 = a(2, 0) * a(3, 1) - a(3, 0) * a(2, 1);
    s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
}

/// Lower Cholesky factor, or `None` when the matrix is not positive definite.
pub fn cholesky4<T: Real>(m: &Matrix4<T>) -> Option<Matrix4<T>> {
    let mut l = Matrix4::<T>::zeros();
    for j in 0..4 {
        let mut d = m[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > T::zero()) {
            return None;
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in (j + 1)..4 {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Some(l)
}

/// Eigenvalues of a real symmetric 4×4 matrix, ascending (cyclic Jacobi).
pub fn symmetric_eigenvalues4<T: Real>(m: &Matrix4<T>) -> [T; 4] {
    let mut a = *m;
    let scale = a.iter().fold(T::zero(), |acc, x| acc.max(x.abs()));
    if scale == T::zero() {
        return [T::zero(); 4];
    }
    for _sweep in 0..64 {
        let mut off = T::zero();
        for p in 0..4 {
            for q in (p + 1)..4 {
                off = off.max(a[(p, q)].abs());
            }
        }
        if off <= T::epsilon() * scale * T::lit(1e-2) {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (T::two() * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..4 {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..4 {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev = [a[(0, 0)], a[(1, 1)], a[(2, 2)], a[(3, 3)]];
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    ev
}

/// Inverse of a symplectic matrix, `S⁻¹ = Ω⁻¹ Sᵀ Ω`.
pub fn symplectic_inverse<T: Real>(s: &Matrix4<T>) -> Matrix4<T> {
    let omega = symplectic_form::<T>();
    -(omega * s.transpose() * omega)
}

pub fn max_abs<T: Real>(m: &Matrix4<T>) -> T {
    m.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
}

pub fn is_symmetric<T: Real>(m: &Matrix4<T>) -> bool {
    (0..4).all(|i| (0..4).all(|j| m[(i, j)] == m[(j, i)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn det4_matches_cofactor_expansion_on_triangular() {
        let m = Matrix4::new(
            2.0, 1.0, 3.0, 4.0, //
            0.0, 3.0, 1.0, 2.0, //
            0.0, 0.0, 5.0, 1.0, //
            0.0, 0.0, 0.0, 7.0,
        );
        assert_relative_eq!(det4(&m), 210.0);
        assert_relative_eq!(det4(&m.transpose()), 210.0);
    }

    #[test]
    fn det4_of_symplectic_form_is_one() {
        assert_eq!(det4(&symplectic_form::<f64>()), 1.0);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let m = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 2.0, -1.0, 3.0));
        assert!(cholesky4(&m).is_none());
        let l = cholesky4(&(Matrix4::<f64>::identity() * 4.0)).unwrap();
        assert_relative_eq!(l, Matrix4::identity() * 2.0);
    }

    #[test]
    fn jacobi_recovers_known_spectrum() {
        // Q diag(1,2,3,4) Qᵀ for a rotation Q mixing all axes.
        let (c, s) = (0.6_f64, 0.8_f64);
        let q1 = Matrix4::new(
            c, -s, 0.0, 0.0, s, c, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0,
        );
        let q2 = Matrix4::new(
            1.0, 0.0, 0.0, 0.0, 0.0, c, 0.0, -s, 0.0, 0.0, 1.0, 0.0, 0.0, s, 0.0, c,
        );
        let q3 = Matrix4::new(
            1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, c, -s, 0.0, 0.0, s, c,
        );
        let q = q1 * q2 * q3;
        let d = Matrix4::from_diagonal(&nalgebra::Vector4::new(3.0, 1.0, 4.0, 2.0));
        let ev = symmetric_eigenvalues4(&(q * d * q.transpose()));
        for (got, want) in ev.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert_relative_eq!(*got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn symplectic_inverse_of_omega() {
        let o = symplectic_form::<f64>();
        assert_relative_eq!(symplectic_inverse(&o) * o, Matrix4::identity());
    }
}
