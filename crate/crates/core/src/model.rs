//! Quadrature representation of the two-mode Hopfield Hamiltonian and the
//! partial Hamiltonians used to attribute coherence to individual terms.
//!
//! With `X = (a + a†)/√2`, `P = i(a† − a)/√2` and the ordering
//! `ξ = (X_a, P_a, X_b, P_b)`, every variant is written as `H = ½ ξᵀ M ξ`
//! with zero-point constants dropped. The individual pieces are
//!
//! ```text
//! H_0     = ω_a a†a + ω_b b†b                  → diag(ω_a, ω_a, ω_b, ω_b)
//! H_res   = ig(a†b − ab†) + D(a†a + aa†)       → 2D on X_aX_a, P_aP_a; −g X_aP_b + g P_aX_b
//! H_anti  = ig(ab − a†b†) + D(aa + a†a†)       → 2D X_aX_a − 2D P_aP_a; −g X_aP_b − g P_aX_b
//! H_int   = ig(a + a†)(b − b†)                 → −2g X_aP_b
//! H_s     = D(a†² + a²)                        → 2D X_aX_a − 2D P_aP_a
//! H_p     = D(a†a + aa†)                       → 2D X_aX_a + 2D P_aP_a
//! ```
//!
//! with `D = g²/ω_b`. Each `M` entry is twice the coefficient of the
//! corresponding quadrature product in `H` (for diagonal entries) or equal
//! to it (for the symmetric off-diagonal pair).

use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix4;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det4, symplectic_form};
use crate::scalar::Real;

/// Which Hamiltonian is analysed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `H_0 + H_res + H_anti`, including the diamagnetic term.
    FullHopfield,
    /// Full coupling without the diamagnetic term (`D = 0`).
    Dicke,
    /// `H_0 + H_res`: beam-splitter and phase-rotation terms only.
    NoAnti,
    /// `H_0 + H_anti`: one- and two-mode squeezing only.
    NoRes,
    /// Dicke coupling plus the one-mode squeezing half of the diamagnetic term.
    SPlusSqueeze,
    /// Dicke coupling plus the phase-rotation half of the diamagnetic term.
    SPlusPhase,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::FullHopfield,
        Variant::Dicke,
        Variant::NoAnti,
        Variant::NoRes,
        Variant::SPlusSqueeze,
        Variant::SPlusPhase,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::FullHopfield => "full-hopfield",
            Variant::Dicke => "dicke",
            Variant::NoAnti => "no-anti",
            Variant::NoRes => "no-res",
            Variant::SPlusSqueeze => "s-plus-squeeze",
            Variant::SPlusPhase => "s-plus-phase",
        }
    }

    /// Additive pieces making up this variant.
    pub fn terms(self) -> &'static [Term] {
        use Term::*;
        match self {
            Variant::FullHopfield => &[Free, Resonant, AntiResonant],
            Variant::Dicke => &[Free, Interaction],
            Variant::NoAnti => &[Free, Resonant],
            Variant::NoRes => &[Free, AntiResonant],
            Variant::SPlusSqueeze => &[Free, Interaction, OneModeSqueeze],
            Variant::SPlusPhase => &[Free, Interaction, PhaseRotation],
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Variant::ALL.iter().map(|v| v.name()).collect();
                format!(
                    "unknown variant `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// One additive piece of a Hamiltonian variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    Free,
    Resonant,
    AntiResonant,
    Interaction,
    OneModeSqueeze,
    PhaseRotation,
}

/// Physical parameters, all frequencies in the same unit (usually `ω_b = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams<T> {
    omega_a: T,
    omega_b: T,
    g: T,
    variant: Variant,
}

impl<T: Real> ModelParams<T> {
    /// Validated parameters. The Dicke variant is rejected at or beyond its
    /// critical coupling `g_C = √(ω_a ω_b)/2`.
    pub fn new(omega_a: T, omega_b: T, g: T, variant: Variant) -> Result<Self> {
        let params = Self::new_unchecked(omega_a, omega_b, g, variant)?;
        if variant == Variant::Dicke && g >= params.critical_coupling() {
            return Err(Error::BeyondCriticalCoupling {
                g: g.as_f64(),
                critical: params.critical_coupling().as_f64(),
            });
        }
        Ok(params)
    }

    /// Like [`ModelParams::new`] but without the Dicke critical-coupling
    /// check, so that unstable regimes can be built and inspected.
    pub fn new_unchecked(omega_a: T, omega_b: T, g: T, variant: Variant) -> Result<Self> {
        positive("omega_a", omega_a)?;
        positive("omega_b", omega_b)?;
        if !(g >= T::zero()) || !g.is_finite() {
            return Err(Error::InvalidParameter {
                name: "g",
                value: g.as_f64(),
                reason: "must be finite and non-negative",
            });
        }
        Ok(Self {
            omega_a,
            omega_b,
            g,
            variant,
        })
    }

    /// Parameters in units of `ω_b`: `ω_a = η_a`, `ω_b = 1`.
    pub fn scaled(eta_a: T, g: T, variant: Variant) -> Result<Self> {
        Self::new(eta_a, T::one(), g, variant)
    }

    pub fn omega_a(&self) -> T {
        self.omega_a
    }

    pub fn omega_b(&self) -> T {
        self.omega_b
    }

    pub fn g(&self) -> T {
        self.g
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn eta_a(&self) -> T {
        self.omega_a / self.omega_b
    }

    /// Diamagnetic coefficient `D = g²/ω_b`.
    pub fn diamagnetic(&self) -> T {
        self.g * self.g / self.omega_b
    }

    /// `ω_C = 2g √(ω_a/ω_b)`.
    pub fn omega_c(&self) -> T {
        T::two() * self.g * (self.omega_a / self.omega_b).sqrt()
    }

    /// Critical coupling of the Dicke variant, `√(ω_a ω_b)/2`.
    pub fn critical_coupling(&self) -> T {
        (self.omega_a * self.omega_b).sqrt() * T::half()
    }

    pub fn with_variant(self, variant: Variant) -> Result<Self> {
        Self::new(self.omega_a, self.omega_b, self.g, variant)
    }

    /// Matrix of a single term for these frequencies and coupling.
    pub fn term_matrix(&self, term: Term) -> Matrix4<T> {
        let z = T::zero();
        let g = self.g;
        let d2 = T::two() * self.diamagnetic();
        let (wa, wb) = (self.omega_a, self.omega_b);
        // (xa_xa, pa_pa, xb_xb, pb_pb, xa_pb, pa_xb)
        let (xx, pp, xbxb, pbpb, xa_pb, pa_xb) = match term {
            Term::Free => (wa, wa, wb, wb, z, z),
            Term::Resonant => (d2, d2, z, z, -g, g),
            Term::AntiResonant => (d2, -d2, z, z, -g, -g),
            Term::Interaction => (z, z, z, z, -T::two() * g, z),
            Term::OneModeSqueeze => (d2, -d2, z, z, z, z),
            Term::PhaseRotation => (d2, d2, z, z, z, z),
        };
        let mut m = Matrix4::from_diagonal(&nalgebra::Vector4::new(xx, pp, xbxb, pbpb));
        m[(0, 3)] = xa_pb;
        m[(3, 0)] = xa_pb;
        m[(1, 2)] = pa_xb;
        m[(2, 1)] = pa_xb;
        m
    }
}

fn positive<T: Real>(name: &'static str, value: T) -> Result<()> {
    if value > T::zero() && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: value.as_f64(),
            reason: "must be finite and strictly positive",
        })
    }
}

/// `H = ½ ξᵀ M ξ` for one variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm<T: Real> {
    matrix: Matrix4<T>,
    variant: Variant,
}

impl<T: Real> QuadraticForm<T> {
    /// Wraps an arbitrary symmetric matrix; asymmetric input is rejected.
    pub fn from_matrix(matrix: Matrix4<T>, variant: Variant) -> Result<Self> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if matrix[(i, j)] != matrix[(j, i)] {
                    return Err(Error::InvalidParameter {
                        name: "matrix",
                        value: (matrix[(i, j)] - matrix[(j, i)]).as_f64(),
                        reason: "quadratic form must be symmetric",
                    });
                }
            }
        }
        Ok(Self { matrix, variant })
    }

    pub fn matrix(&self) -> &Matrix4<T> {
        &self.matrix
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Dynamical matrix `Ω M`: `dξ/dt = Ω M ξ`.
    pub fn dynamical_matrix(&self) -> Matrix4<T> {
        symplectic_form::<T>() * self.matrix
    }

    /// The two roots `ω²` of the characteristic polynomial of `Ω M`.
    ///
    /// `Ω M` is a Hamiltonian matrix, so its spectrum is `±λ₁, ±λ₂` with
    /// `λ² = −ω²`, and `ω²` solves `x² − s x + det M = 0` where
    /// `s = −tr((Ω M)²)/2`. The larger-modulus root is formed first and the
    /// other from the product, which keeps both accurate when they differ by
    /// orders of magnitude.
    pub fn squared_frequencies(&self) -> [Complex<T>; 2] {
        let h = self.dynamical_matrix();
        let s = -(h * h).trace() * T::half();
        let p = det4(&self.matrix);
        let half_s = s * T::half();
        let disc = half_s * half_s - p;
        if disc >= T::zero() {
            let root = disc.sqrt();
            let q = if half_s >= T::zero() {
                half_s + root
            } else {
                half_s - root
            };
            let other = if q != T::zero() { p / q } else { T::zero() };
            let (hi, lo) = if q.abs() >= other.abs() {
                (q, other)
            } else {
                (other, q)
            };
            [Complex::new(hi, T::zero()), Complex::new(lo, T::zero())]
        } else {
            let im = (-disc).sqrt();
            [Complex::new(half_s, im), Complex::new(half_s, -im)]
        }
    }
}

/// Builds `M` for the variant stored in `params`.
pub fn build_quadratic_form<T: Real>(params: &ModelParams<T>) -> QuadraticForm<T> {
    let matrix = params
        .variant
        .terms()
        .iter()
        .fold(Matrix4::zeros(), |acc, &t| acc + params.term_matrix(t));
    QuadraticForm {
        matrix,
        variant: params.variant,
    }
}

/// Outcome of the dynamical stability check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport<T: Real> {
    pub stable: bool,
    /// Eigenvalues of `Ω M`, in conjugate pairs.
    pub eigenvalues: [Complex<T>; 4],
    /// Smallest `|Im λ|`, i.e. the softest normal-mode frequency.
    pub min_abs_imag: T,
    pub max_abs_real: T,
}

/// Stable iff every eigenvalue of `Ω M` is purely imaginary (within
/// [`Real::STABILITY_TOL`]) and nonzero.
pub fn validate_stability<T: Real>(form: &QuadraticForm<T>) -> StabilityReport<T> {
    let i = Complex::new(T::zero(), T::one());
    let mut eigenvalues = [Complex::new(T::zero(), T::zero()); 4];
    for (k, w2) in form.squared_frequencies().into_iter().enumerate() {
        let lambda = i * w2.sqrt();
        eigenvalues[2 * k] = lambda;
        eigenvalues[2 * k + 1] = -lambda;
    }
    let min_abs_imag = eigenvalues
        .iter()
        .map(|l| l.im.abs())
        .fold(T::infinity(), T::min);
    let max_abs_real = eigenvalues
        .iter()
        .map(|l| l.re.abs())
        .fold(T::zero(), T::max);
    let stable = eigenvalues.iter().all(|l| {
        l.re.abs() < T::STABILITY_TOL * T::one().max(l.im.abs()) && l.im.abs() > T::zero()
    });
    StabilityReport {
        stable,
        eigenvalues,
        min_abs_imag,
        max_abs_real,
    }
}
