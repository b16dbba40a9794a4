//! Global Lindblad dynamics at the level of second moments.
//!
//! Each polariton `p_j` is damped by two Ohmic reservoirs (photon bath with
//! `ζᵃ(ω) = γω`, matter bath with `ζᵇ(ω) = κω`). The photon bath couples to
//! `p_j` through `W_j = w_j − y_j`, the matter bath through `X_j = x_j − z_j`.
//! Emission runs at `ζ|·|²(N + 1)` and absorption at `ζ|·|²N`, each bath at
//! its own temperature.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex;

use crate::bogoliubov::{
    bare_coefficients, hopfield_coefficients, polariton_basis, PolaritonBasis,
};
use crate::error::{Error, Result};
use crate::measures::symplectic_spectrum;
use crate::model::{ModelParams, Variant};
use crate::scalar::Real;

/// Two Ohmic reservoirs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec<T> {
    pub gamma: T,
    pub kappa: T,
    pub t_a: T,
    pub t_b: T,
}

impl<T: Real> BathSpec<T> {
    pub fn new(gamma: T, kappa: T, t_a: T, t_b: T) -> Result<Self> {
        for (name, v) in [
            ("gamma", gamma),
            ("kappa", kappa),
            ("t_a", t_a),
            ("t_b", t_b),
        ] {
            if !(v >= T::zero()) || !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value: v.as_f64(),
                    reason: "must be finite and non-negative",
                });
            }
        }
        Ok(Self {
            gamma,
            kappa,
            t_a,
            t_b,
        })
    }

    /// Both reservoirs at temperature `t`.
    pub fn equilibrium(gamma: T, kappa: T, t: T) -> Result<Self> {
        Self::new(gamma, kappa, t, t)
    }
}

/// Bose-Einstein occupation `1/(e^{ω/T} − 1)`, zero at `T = 0`.
pub fn thermal_occupation<T: Real>(omega: T, temperature: T) -> Result<T> {
    if !(omega > T::zero()) {
        return Err(Error::InvalidParameter {
            name: "omega",
            value: omega.as_f64(),
            reason: "must be strictly positive",
        });
    }
    if !(temperature >= T::zero()) {
        return Err(Error::InvalidParameter {
            name: "temperature",
            value: temperature.as_f64(),
            reason: "must be non-negative",
        });
    }
    if temperature == T::zero() {
        return Ok(T::zero());
    }
    Ok(T::one() / (omega / temperature).exp_m1())
}

/// Rates of one polariton.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeRates<T> {
    /// `ζᵃ(ω_j)|W_j|²`.
    pub weight_a: T,
    /// `ζᵇ(ω_j)|X_j|²`.
    pub weight_b: T,
    pub n_a: T,
    pub n_b: T,
    /// Absorption rate `Γ(ω_j)`.
    pub gain: T,
    /// Emission rate `Γ(−ω_j)`.
    pub loss: T,
}

impl<T: Real> ModeRates<T> {
    /// Net damping `Γ(−ω_j) − Γ(ω_j) = ζᵃ|W_j|² + ζᵇ|X_j|²`.
    pub fn decay(&self) -> T {
        self.weight_a + self.weight_b
    }
}

/// Rates of both polaritons, indexed `[+, −]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSet<T> {
    pub modes: [ModeRates<T>; 2],
}

pub fn rates<T: Real>(basis: &PolaritonBasis<T>, bath: &BathSpec<T>) -> Result<RateSet<T>> {
    let omegas = basis.omegas();
    let mut modes = [ModeRates {
        weight_a: T::zero(),
        weight_b: T::zero(),
        n_a: T::zero(),
        n_b: T::zero(),
        gain: T::zero(),
        loss: T::zero(),
    }; 2];
    for (j, m) in basis.modes().iter().enumerate() {
        let w = omegas[j];
        let weight_a = bath.gamma * w * m.photon_weight().norm_sqr();
        let weight_b = bath.kappa * w * m.matter_weight().norm_sqr();
        let n_a = thermal_occupation(w, bath.t_a)?;
        let n_b = thermal_occupation(w, bath.t_b)?;
        modes[j] = ModeRates {
            weight_a,
            weight_b,
            n_a,
            n_b,
            gain: weight_a * n_a + weight_b * n_b,
            loss: weight_a * (n_a + T::one()) + weight_b * (n_b + T::one()),
        };
    }
    Ok(RateSet { modes })
}

/// The independent polariton second moments. Arrays are indexed `[+, −]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentVector<T> {
    /// `⟨p_j²⟩`
    pub pp: [Complex<T>; 2],
    /// `⟨p_j†²⟩`
    pub dd: [Complex<T>; 2],
    /// `⟨p_j†p_j⟩`
    pub occupation: [T; 2],
    /// `⟨p_+†p_-⟩`
    pub plus_dag_minus: Complex<T>,
    /// `⟨p_-†p_+⟩`
    pub minus_dag_plus: Complex<T>,
    /// `⟨p_+†p_-†⟩`
    pub dag_dag: Complex<T>,
    /// `⟨p_+p_-⟩`
    pub ann_ann: Complex<T>,
}

impl<T: Real> MomentVector<T> {
    /// Moments of a product of thermal polariton states.
    pub fn thermal(occupation: [T; 2]) -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self {
            pp: [z; 2],
            dd: [z; 2],
            occupation,
            plus_dag_minus: z,
            minus_dag_plus: z,
            dag_dag: z,
            ann_ann: z,
        }
    }

    pub fn vacuum() -> Self {
        Self::thermal([T::zero(); 2])
    }

    fn components(&self) -> [Complex<T>; 10] {
        let r = |v: T| Complex::new(v, T::zero());
        [
            self.pp[0],
            self.pp[1],
            self.dd[0],
            self.dd[1],
            r(self.occupation[0]),
            r(self.occupation[1]),
            self.plus_dag_minus,
            self.minus_dag_plus,
            self.dag_dag,
            self.ann_ann,
        ]
    }

    /// Largest componentwise modulus of `self − other`.
    pub fn distance(&self, other: &Self) -> T {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (*a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// `⟨o_1 o_2⟩` for `o = p_j` or `p_j†`.
    fn product(&self, j: usize, dag_j: bool, k: usize, dag_k: bool) -> Complex<T> {
        let r = |v: T| Complex::new(v, T::zero());
        if j == k {
            return match (dag_j, dag_k) {
                (false, false) => self.pp[j],
                (true, true) => self.dd[j],
                (true, false) => r(self.occupation[j]),
                (false, true) => r(self.occupation[j] + T::one()),
            };
        }
        // Operators of different polaritons commute; order as (+, −).
        let (dag_plus, dag_minus) = if j == 0 {
            (dag_j, dag_k)
        } else {
            (dag_k, dag_j)
        };
        match (dag_plus, dag_minus) {
            (true, false) => self.plus_dag_minus,
            (false, true) => self.minus_dag_plus,
            (true, true) => self.dag_dag,
            (false, false) => self.ann_ann,
        }
    }

    /// Symmetrized covariance of the polariton quadratures
    /// `(X_+, P_+, X_-, P_-)`, with `X = (p + p†)/√2`, `P = i(p† − p)/√2`.
    pub fn to_covariance(&self) -> Matrix4<T> {
        let h = T::half();
        let i = Complex::new(T::zero(), T::one());
        let one = Complex::new(T::one(), T::zero());
        // Quadrature q = α p + β p†, stored unscaled; the 1/√2 factors are
        // applied once as the overall ½.
        let coeff = |q: usize| if q % 2 == 0 { (one, one) } else { (-i, i) };
        let mut sigma = Matrix4::zeros();
        for r in 0..4 {
            for c in 0..4 {
                let (j, k) = (r / 2, c / 2);
                let (ar, br) = coeff(r);
                let (ac, bc) = coeff(c);
                let ordered = |j,
                               k,
                               (a1, b1): (Complex<T>, Complex<T>),
                               (a2, b2): (Complex<T>, Complex<T>)| {
                    a1 * a2 * self.product(j, false, k, false)
                        + a1 * b2 * self.product(j, false, k, true)
                        + b1 * a2 * self.product(j, true, k, false)
                        + b1 * b2 * self.product(j, true, k, true)
                };
                let sym =
                    (ordered(j, k, (ar, br), (ac, bc)) + ordered(k, j, (ac, bc), (ar, br))) * h;
                sigma[(r, c)] = sym.re * h;
            }
        }
        sigma
    }
}

/// Right-hand side of the polariton moment equations.
pub fn moment_derivatives<T: Real>(
    moments: &MomentVector<T>,
    rates: &RateSet<T>,
    basis: &PolaritonBasis<T>,
) -> MomentVector<T> {
    let [wp, wm] = basis.omegas();
    let w = [wp, wm];
    let d = [rates.modes[0].decay(), rates.modes[1].decay()];
    let total = d[0] + d[1];
    let c = |re: T, im: T| Complex::new(re, im);
    let two = T::two();
    MomentVector {
        pp: [0, 1].map(|j| c(-d[j], -two * w[j]) * moments.pp[j]),
        dd: [0, 1].map(|j| c(-d[j], two * w[j]) * moments.dd[j]),
        occupation: [0, 1].map(|j| rates.modes[j].gain - d[j] * moments.occupation[j]),
        plus_dag_minus: c(-total, wp - wm) * moments.plus_dag_minus,
        minus_dag_plus: c(-total, -(wp - wm)) * moments.minus_dag_plus,
        dag_dag: c(-total, wp + wm) * moments.dag_dag,
        ann_ann: c(-total, -(wp + wm)) * moments.ann_ann,
    }
}

/// Exact solution of the moment equations after time `t`.
pub fn evolve_moments<T: Real>(
    initial: &MomentVector<T>,
    basis: &PolaritonBasis<T>,
    rates: &RateSet<T>,
    t: T,
) -> Result<MomentVector<T>> {
    if !(t >= T::zero()) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t.as_f64(),
            reason: "must be non-negative",
        });
    }
    if t == T::zero() {
        return Ok(*initial);
    }
    let [wp, wm] = basis.omegas();
    let w = [wp, wm];
    let d = [rates.modes[0].decay(), rates.modes[1].decay()];
    let total = d[0] + d[1];
    let prop = |re: T, im: T| Complex::new(re * t, im * t).exp();
    let two = T::two();
    let occupation = [0, 1].map(|j| {
        let n0 = initial.occupation[j];
        let gain = rates.modes[j].gain;
        if d[j] > T::zero() {
            let fixed = gain / d[j];
            fixed + (n0 - fixed) * (-d[j] * t).exp()
        } else {
            n0 + gain * t
        }
    });
    Ok(MomentVector {
        pp: [0, 1].map(|j| prop(-d[j], -two * w[j]) * initial.pp[j]),
        dd: [0, 1].map(|j| prop(-d[j], two * w[j]) * initial.dd[j]),
        occupation,
        plus_dag_minus: prop(-total, wp - wm) * initial.plus_dag_minus,
        minus_dag_plus: prop(-total, -(wp - wm)) * initial.minus_dag_plus,
        dag_dag: prop(-total, wp + wm) * initial.dag_dag,
        ann_ann: prop(-total, -(wp + wm)) * initial.ann_ann,
    })
}

fn require_damped<T: Real>(rates: &RateSet<T>) -> Result<()> {
    for (j, name) in [(0, "plus"), (1, "minus")] {
        if !(rates.modes[j].decay() > T::zero()) {
            return Err(Error::UndampedMode { mode: name });
        }
    }
    Ok(())
}

/// Fixed point of the moment equations.
pub fn steady_moments<T: Real>(rates: &RateSet<T>) -> Result<MomentVector<T>> {
    require_damped(rates)?;
    Ok(MomentVector::thermal(
        [0, 1].map(|j| rates.modes[j].gain / rates.modes[j].decay()),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTag {
    Bare,
    Polariton,
}

/// Symmetrized covariance matrix of a zero-mean two-mode Gaussian state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceState<T: Real> {
    sigma: Matrix4<T>,
    basis: BasisTag,
}

impl<T: Real> CovarianceState<T> {
    /// Symmetrizes `sigma` and checks `σ + iΩ/2 ≥ 0`.
    pub fn new(sigma: Matrix4<T>, basis: BasisTag) -> Result<Self> {
        let sigma = (sigma + sigma.transpose()) * T::half();
        let (_, v2) = symplectic_spectrum(&sigma)?;
        if v2 < T::half() - T::PHYSICALITY_TOL {
            return Err(Error::UnphysicalEigenvalue { value: v2.as_f64() });
        }
        Ok(Self { sigma, basis })
    }

    pub fn vacuum(basis: BasisTag) -> Self {
        Self {
            sigma: Matrix4::identity() * T::half(),
            basis,
        }
    }

    pub fn sigma(&self) -> &Matrix4<T> {
        &self.sigma
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn block_a(&self) -> Matrix2<T> {
        self.sigma.fixed_view::<2, 2>(0, 0).into_owned()
    }

    pub fn block_b(&self) -> Matrix2<T> {
        self.sigma.fixed_view::<2, 2>(2, 2).into_owned()
    }

    pub fn block_ab(&self) -> Matrix2<T> {
        self.sigma.fixed_view::<2, 2>(0, 2).into_owned()
    }
}

/// `⟨X_j²⟩ = ⟨P_j²⟩` in the steady state: the bath-weighted average of
/// `(1 + 2N)/2`.
pub fn steady_quadrature_variances<T: Real>(rates: &RateSet<T>) -> Result<[T; 2]> {
    require_damped(rates)?;
    let one = T::one();
    let two = T::two();
    Ok(rates.modes.map(|m| {
        (m.weight_a * (one + two * m.n_a) + m.weight_b * (one + two * m.n_b))
            / (two * (m.weight_a + m.weight_b))
    }))
}

/// `σ' = diag(ν_+, ν_+, ν_-, ν_-)` in the polariton basis.
pub fn steady_polariton_covariance<T: Real>(
    basis: &PolaritonBasis<T>,
    bath: &BathSpec<T>,
) -> Result<CovarianceState<T>> {
    let [np, nm] = steady_quadrature_variances(&rates(basis, bath)?)?;
    CovarianceState::new(
        Matrix4::from_diagonal(&nalgebra::Vector4::new(np, np, nm, nm)),
        BasisTag::Polariton,
    )
}

/// Bare-basis ground state `S (I/2) Sᵀ` of any stable variant.
pub fn ground_state_covariance<T: Real>(params: &ModelParams<T>) -> Result<CovarianceState<T>> {
    if params.g() == T::zero() {
        return Ok(CovarianceState::vacuum(BasisTag::Bare));
    }
    let basis = polariton_basis(params)?;
    let s = basis.transform();
    CovarianceState::new(s * s.transpose() * T::half(), BasisTag::Bare)
}

/// Hopfield ground state written with `τ_j` and `δ`.
pub fn ground_state_closed_form<T: Real>(params: &ModelParams<T>) -> Result<Matrix4<T>> {
    let c = bare_coefficients(params)?;
    let wa = params.omega_a();
    let [wp, wm] = c.omega;
    let h = T::half();
    let x = wa * (c.tau[0] / wp + c.tau[1] / wm) * h;
    let p = (wp * c.tau[0] + wm * c.tau[1]) / wa * h;
    let d = c.delta;
    let z = T::zero();
    Ok(Matrix4::new(
        x, z, z, d, //
        z, p, d, z, //
        z, d, x, z, //
        d, z, z, p,
    ))
}

/// Bare-basis steady state `S σ' Sᵀ`.
pub fn thermal_bare_covariance<T: Real>(
    params: &ModelParams<T>,
    bath: &BathSpec<T>,
) -> Result<CovarianceState<T>> {
    let basis = polariton_basis(params)?;
    thermal_from_basis(&basis, bath)
}

pub fn thermal_from_basis<T: Real>(
    basis: &PolaritonBasis<T>,
    bath: &BathSpec<T>,
) -> Result<CovarianceState<T>> {
    let prime = steady_polariton_covariance(basis, bath)?;
    let s = basis.transform();
    CovarianceState::new(s * prime.sigma() * s.transpose(), BasisTag::Bare)
}

/// Hopfield steady state written blockwise with `τ_j, χ_j, ϑ_j`.
///
/// The `P_bP_b` entry is `4g²ω_aω_b² Σ_j ⟨X_j²⟩χ_j/ω_j`; the `1/ω_j` is what
/// makes it agree with `S σ' Sᵀ` and reduce to the vacuum at `T = 0`.
pub fn thermal_closed_form<T: Real>(
    params: &ModelParams<T>,
    bath: &BathSpec<T>,
) -> Result<Matrix4<T>> {
    if params.variant() != Variant::FullHopfield {
        return Err(Error::WrongVariant {
            expected: Variant::FullHopfield,
            found: params.variant(),
        });
    }
    let c = bare_coefficients(params)?;
    let basis = hopfield_coefficients(params)?;
    let nu = steady_quadrature_variances(&rates(&basis, bath)?)?;
    let (wa, wb, g) = (params.omega_a(), params.omega_b(), params.g());
    let sum = |f: &dyn Fn(usize) -> T| f(0) + f(1);
    let w = c.omega;
    let xa = wa * sum(&|j| nu[j] * c.tau[j] / w[j]);
    let pa = sum(&|j| w[j] * nu[j] * c.tau[j]) / wa;
    // 4g²ω_a χ_j = ω_b ω_C² χ_j.
    let xb = wb * sum(&|j| w[j] * nu[j] * c.omega_c_sq_chi[j]);
    let pb = wb * wb * wb * sum(&|j| nu[j] * c.omega_c_sq_chi[j] / w[j]);
    let xa_pb = -T::two() * g * wa * wb * sum(&|j| nu[j] * c.vartheta[j] / w[j]);
    let pa_xb = T::two() * g * sum(&|j| w[j] * nu[j] * c.vartheta[j]);
    let z = T::zero();
    Ok(Matrix4::new(
        xa, z, z, xa_pb, //
        z, pa, pa_xb, z, //
        z, pa_xb, xb, z, //
        xa_pb, z, z, pb,
    ))
}

/// Ratio of the polariton splitting to the largest damping rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularReport<T> {
    pub ratio: T,
    pub ok: bool,
}

pub const SECULAR_THRESHOLD: f64 = 10.0;

pub fn secular_validity<T: Real>(
    basis: &PolaritonBasis<T>,
    bath: &BathSpec<T>,
) -> SecularReport<T> {
    let wp = basis.omega_plus();
    let rate = (bath.gamma * wp).max(bath.kappa * wp);
    let ratio = if rate > T::zero() {
        (wp - basis.omega_minus()) / rate
    } else {
        T::infinity()
    };
    SecularReport {
        ratio,
        ok: ratio >= T::lit(SECULAR_THRESHOLD),
    }
}
