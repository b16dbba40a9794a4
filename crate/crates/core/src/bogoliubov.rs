//! Polariton normal modes.
//!
//! A polariton is `p_j = w_j a + x_j b + y_j a† + z_j b†`. In quadrature
//! language the pair `(X_j, P_j)` of each polariton is a linear function of
//! the bare quadratures `ξ`; stacking those rows gives `T` with
//! `ξ_pol = T ξ`, and the basis stores `S = T⁻¹`, which maps polariton
//! quadratures back to bare ones (`σ = S σ' Sᵀ`).

use nalgebra::Matrix4;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{symplectic_form, symplectic_inverse};
use crate::model::{build_quadratic_form, validate_stability, ModelParams, QuadraticForm, Variant};
use crate::scalar::Real;

/// `(w, x, y, z)` of one polariton.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients<T> {
    pub w: Complex<T>,
    pub x: Complex<T>,
    pub y: Complex<T>,
    pub z: Complex<T>,
}

impl<T: Real> ModeCoefficients<T> {
    /// `|w|² + |x|² − |y|² − |z|²`, equal to one for a canonical mode.
    pub fn norm(&self) -> T {
        self.w.norm_sqr() + self.x.norm_sqr() - self.y.norm_sqr() - self.z.norm_sqr()
    }

    /// `w_i w_j* + x_i x_j* − y_i y_j* − z_i z_j*`, i.e. `[p_i, p_j†]`.
    pub fn commutator_dagger(&self, other: &Self) -> Complex<T> {
        self.w * other.w.conj() + self.x * other.x.conj()
            - self.y * other.y.conj()
            - self.z * other.z.conj()
    }

    /// `[p_i, p_j] = w_i y_j − y_i w_j + x_i z_j − z_i x_j`.
    pub fn commutator(&self, other: &Self) -> Complex<T> {
        self.w * other.y - self.y * other.w + self.x * other.z - self.z * other.x
    }

    /// Photon weight `W_j = w_j − y_j` entering the bath coupling.
    pub fn photon_weight(&self) -> Complex<T> {
        self.w - self.y
    }

    /// Matter weight `X_j = x_j − z_j` entering the bath coupling.
    pub fn matter_weight(&self) -> Complex<T> {
        self.x - self.z
    }

    /// Rows of `X_j` and `P_j` in terms of `(X_a, P_a, X_b, P_b)`.
    pub fn quadrature_rows(&self) -> ([T; 4], [T; 4]) {
        let i = Complex::new(T::zero(), T::one());
        let c = [
            self.w + self.y,
            i * (self.w - self.y),
            self.x + self.z,
            i * (self.x - self.z),
        ];
        (c.map(|v| v.re), c.map(|v| v.im))
    }

    /// Inverse of [`ModeCoefficients::quadrature_rows`].
    pub fn from_quadrature_rows(rx: [T; 4], rp: [T; 4]) -> Self {
        let i = Complex::new(T::zero(), T::one());
        let c: [Complex<T>; 4] = std::array::from_fn(|k| Complex::new(rx[k], rp[k]));
        let h = T::half();
        Self {
            w: (c[0] - i * c[1]) * h,
            y: (c[0] + i * c[1]) * h,
            x: (c[2] - i * c[3]) * h,
            z: (c[2] + i * c[3]) * h,
        }
    }

    fn scale(self, s: T) -> Self {
        Self {
            w: self.w * s,
            x: self.x * s,
            y: self.y * s,
            z: self.z * s,
        }
    }
}

/// Two polaritons, index 0 is `+` (upper), index 1 is `−` (lower).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonBasis<T: Real> {
    omega: [T; 2],
    modes: [ModeCoefficients<T>; 2],
    transform: Matrix4<T>,
}

impl<T: Real> PolaritonBasis<T> {
    /// Builds the basis from coefficients; `S` is derived from them.
    pub fn from_coefficients(omega: [T; 2], modes: [ModeCoefficients<T>; 2]) -> Self {
        let mut t = Matrix4::zeros();
        for (k, m) in modes.iter().enumerate() {
            let (rx, rp) = m.quadrature_rows();
            for c in 0..4 {
                t[(2 * k, c)] = rx[c];
                t[(2 * k + 1, c)] = rp[c];
            }
        }
        Self {
            omega,
            modes,
            transform: symplectic_inverse(&t),
        }
    }

    /// Builds the basis from a symplectic `S`; coefficients are derived.
    pub fn from_transform(omega: [T; 2], transform: Matrix4<T>) -> Self {
        let t = symplectic_inverse(&transform);
        let modes = std::array::from_fn(|k| {
            let rx = std::array::from_fn(|c| t[(2 * k, c)]);
            let rp = std::array::from_fn(|c| t[(2 * k + 1, c)]);
            ModeCoefficients::from_quadrature_rows(rx, rp)
        });
        Self {
            omega,
            modes,
            transform,
        }
    }

    pub fn omega_plus(&self) -> T {
        self.omega[0]
    }

    pub fn omega_minus(&self) -> T {
        self.omega[1]
    }

    pub fn omegas(&self) -> [T; 2] {
        self.omega
    }

    pub fn modes(&self) -> &[ModeCoefficients<T>; 2] {
        &self.modes
    }

    pub fn plus(&self) -> &ModeCoefficients<T> {
        &self.modes[0]
    }

    pub fn minus(&self) -> &ModeCoefficients<T> {
        &self.modes[1]
    }

    /// `S`: polariton quadratures to bare quadratures.
    pub fn transform(&self) -> &Matrix4<T> {
        &self.transform
    }

    /// `max |S Ω Sᵀ − Ω|`.
    pub fn symplectic_defect(&self) -> T {
        let o = symplectic_form::<T>();
        crate::linalg::max_abs(&(self.transform * o * self.transform.transpose() - o))
    }
}

fn require(params_variant: Variant, expected: Variant) -> Result<()> {
    if params_variant == expected {
        Ok(())
    } else {
        Err(Error::WrongVariant {
            expected,
            found: params_variant,
        })
    }
}

fn check_split<T: Real>(wp: T, wm: T) -> Result<()> {
    if wp - wm < T::DEGENERACY_TOL {
        Err(Error::DegeneratePolaritons {
            omega_plus: wp.as_f64(),
            omega_minus: wm.as_f64(),
        })
    } else {
        Ok(())
    }
}

/// Closed-form Hopfield frequencies `(ω_+, ω_-)`.
pub fn hopfield_frequencies<T: Real>(params: &ModelParams<T>) -> Result<(T, T)> {
    require(params.variant(), Variant::FullHopfield)?;
    let (wa, wb) = (params.omega_a(), params.omega_b());
    let wc2 = params.omega_c().powi(2);
    let s = wa * wa + wb * wb + wc2;
    // s² − 4ω_a²ω_b² factored so that neither factor cancels.
    let r = (((wa - wb).powi(2) + wc2) * ((wa + wb).powi(2) + wc2)).sqrt();
    let wp2 = (s + r) * T::half();
    let wm2 = (wa * wb).powi(2) / wp2;
    Ok((wp2.sqrt(), wm2.sqrt()))
}

/// Dicke frequencies; requires `g < g_C`.
pub fn dicke_frequencies<T: Real>(params: &ModelParams<T>) -> Result<(T, T)> {
    require(params.variant(), Variant::Dicke)?;
    let (wa, wb, g) = (params.omega_a(), params.omega_b(), params.g());
    if g >= params.critical_coupling() {
        return Err(Error::BeyondCriticalCoupling {
            g: g.as_f64(),
            critical: params.critical_coupling().as_f64(),
        });
    }
    let r = ((wa * wa - wb * wb).powi(2) + T::lit(16.0) * g * g * wa * wb).sqrt();
    let wp2 = (wa * wa + wb * wb + r) * T::half();
    let wm2 = wa * wb * (wa * wb - T::lit(4.0) * g * g) / wp2;
    Ok((wp2.sqrt(), wm2.sqrt()))
}

/// `(ω_+² − ω_b², ω_-² − ω_b²)` from their sum and their product
/// `−ω_b² ω_C²`, without subtracting nearly equal squares.
fn detunings<T: Real>(sum: T, omega_b: T, omega_c: T) -> (T, T) {
    let prod = -(omega_b * omega_c).powi(2);
    let r = (sum * sum - T::lit(4.0) * prod).sqrt();
    if sum >= T::zero() {
        let dp = (sum + r) * T::half();
        (dp, if dp > T::zero() { prod / dp } else { T::zero() })
    } else {
        let dm = (sum - r) * T::half();
        (prod / dm, dm)
    }
}

/// Decoupled basis at `g = 0`, with the phases the coupled coefficients
/// approach as `g → 0`.
fn decoupled_basis<T: Real>(params: &ModelParams<T>) -> Result<PolaritonBasis<T>> {
    let (wa, wb) = (params.omega_a(), params.omega_b());
    let (wp, wm) = (wa.max(wb), wa.min(wb));
    check_split(wp, wm)?;
    let zero = Complex::new(T::zero(), T::zero());
    let mode = |w, x| ModeCoefficients {
        w,
        x,
        y: zero,
        z: zero,
    };
    let one = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    let modes = if wa > wb {
        [mode(one, zero), mode(zero, -i)]
    } else {
        [mode(zero, i), mode(one, zero)]
    };
    Ok(PolaritonBasis::from_coefficients([wp, wm], modes))
}

/// Unnormalized coefficient vector of the closed form, with `d = ω² − ω_b²`.
fn closed_form_vector<T: Real>(params: &ModelParams<T>, omega: T, d: T) -> ModeCoefficients<T> {
    let (wa, wb, g) = (params.omega_a(), params.omega_b(), params.g());
    let re = |v: T| Complex::new(v, T::zero());
    let im = |v: T| Complex::new(T::zero(), v);
    let lead = d / (wb * wb) / (T::two() * wb) * (wb / wa).sqrt();
    let k = g * (wa / (wb * wb * wb)).sqrt();
    // 1 − ω/ω_b written as −d/(ω_b(ω + ω_b)).
    let one_minus = -d / (wb * (omega + wb));
    ModeCoefficients {
        w: re(lead * (omega + wa)),
        x: im(k * (T::one() + omega / wb)),
        y: re(lead * (omega - wa)),
        z: im(k * one_minus),
    }
}

/// Closed-form Hopfield polaritons.
pub fn hopfield_coefficients<T: Real>(params: &ModelParams<T>) -> Result<PolaritonBasis<T>> {
    let (wp, wm) = hopfield_frequencies(params)?;
    if params.g() == T::zero() {
        return decoupled_basis(params);
    }
    check_split(wp, wm)?;
    let (wa, wb) = (params.omega_a(), params.omega_b());
    let (dp, dm) = detunings(
        wa * wa + params.omega_c().powi(2) - wb * wb,
        wb,
        params.omega_c(),
    );
    let g2 = params.g() * params.g();
    let norm = |omega: T, d: T| {
        (omega / wb) * ((d / (wb * wb)).powi(2) + T::lit(4.0) * g2 * wa / (wb * wb * wb))
    };
    let plus = closed_form_vector(params, wp, dp).scale(T::one() / norm(wp, dp).sqrt());
    let minus = closed_form_vector(params, wm, dm).scale(-T::one() / norm(wm, dm).sqrt());
    Ok(PolaritonBasis::from_coefficients([wp, wm], [plus, minus]))
}

/// Dicke polaritons. The closed-form vectors have the same shape as the
/// Hopfield ones, evaluated at the Dicke frequencies and normalized
/// directly.
pub fn dicke_solution<T: Real>(params: &ModelParams<T>) -> Result<PolaritonBasis<T>> {
    let (wp, wm) = dicke_frequencies(params)?;
    if params.g() == T::zero() {
        return decoupled_basis(params);
    }
    check_split(wp, wm)?;
    let (wa, wb) = (params.omega_a(), params.omega_b());
    let (dp, dm) = detunings(wa * wa - wb * wb, wb, params.omega_c());
    let mut modes = [(wp, dp, T::one()), (wm, dm, -T::one())].map(|(omega, d, sign)| {
        let v = closed_form_vector(params, omega, d);
        (v, sign)
    });
    for (v, sign) in modes.iter_mut() {
        let n = v.norm();
        if !(n > T::zero()) {
            return Err(Error::NotBoundedBelow);
        }
        *v = v.scale(*sign / n.sqrt());
    }
    Ok(PolaritonBasis::from_coefficients(
        [wp, wm],
        modes.map(|(v, _)| v),
    ))
}

/// Normal-mode frequencies `(ω_+, ω_-)` of any stable form, without the
/// degeneracy check.
pub fn normal_mode_frequencies<T: Real>(form: &QuadraticForm<T>) -> Result<(T, T)> {
    let report = validate_stability(form);
    if !report.stable {
        return Err(Error::Unstable {
            max_real: report.max_abs_real.as_f64(),
        });
    }
    let [hi, lo] = form.squared_frequencies();
    Ok((hi.re.sqrt(), lo.re.sqrt()))
}

/// Symplectic diagonalization of an arbitrary stable form.
///
/// For `H = Ω M` with spectrum `±iω_+, ±iω_-`, `H² + ω_∓² I` projects onto the
/// real invariant plane of the other mode. A column `u` of that projector
/// and `−H u/ω` span the plane, and scaling them to unit symplectic area
/// gives the pair of columns of `S` for that mode.
pub fn diagonalize_general<T: Real>(form: &QuadraticForm<T>) -> Result<PolaritonBasis<T>> {
    let (wp, wm) = normal_mode_frequencies(form)?;
    check_split(wp, wm)?;
    let h = form.dynamical_matrix();
    let h2 = h * h;
    let omega = symplectic_form::<T>();
    let mut s = Matrix4::zeros();
    for (k, (w, other)) in [(wp, wm), (wm, wp)].into_iter().enumerate() {
        let proj = h2 + Matrix4::identity() * (other * other);
        let col = (0..4)
            .max_by(|&a, &b| {
                let na: T = proj.column(a).iter().map(|&v| v * v).sum();
                let nb: T = proj.column(b).iter().map(|&v| v * v).sum();
                na.partial_cmp(&nb).unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(0);
        let x = proj.column(col).into_owned();
        let p = -(h * x) / w;
        let area = (x.transpose() * omega * p)[(0, 0)];
        if !(area > T::zero()) {
            return Err(Error::NotBoundedBelow);
        }
        let inv = T::one() / area.sqrt();
        s.set_column(2 * k, &(x * inv));
        s.set_column(2 * k + 1, &(p * inv));
    }
    Ok(PolaritonBasis::from_transform([wp, wm], s))
}

/// Basis for any variant: closed forms for Hopfield and Dicke, the general
/// diagonalizer otherwise.
pub fn polariton_basis<T: Real>(params: &ModelParams<T>) -> Result<PolaritonBasis<T>> {
    match params.variant() {
        Variant::FullHopfield => hopfield_coefficients(params),
        Variant::Dicke => dicke_solution(params),
        _ if params.g() == T::zero() => decoupled_basis(params),
        _ => diagonalize_general(&build_quadratic_form(params)),
    }
}

/// Auxiliary quantities of the Hopfield bare-basis transform. Arrays are
/// indexed `[+, −]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BareBasisCoefficients<T> {
    pub omega: [T; 2],
    pub tau: [T; 2],
    /// `1/(ω_C²ω_b² + (ω_j² − ω_b²)²)`; infinite for the bare matter mode at `g = 0`.
    pub chi: [T; 2],
    pub lambda: [T; 2],
    pub epsilon: [T; 2],
    /// `τ_j/(ω_j² − ω_b²)`.
    pub vartheta: [T; 2],
    /// `ω_C² χ_j`, finite also at `g = 0`.
    pub omega_c_sq_chi: [T; 2],
    pub delta: T,
    pub omega_c: T,
}

/// Evaluates `τ_j, χ_j, λ_j, ε_j, ϑ_j, δ` for the Hopfield model.
pub fn bare_coefficients<T: Real>(params: &ModelParams<T>) -> Result<BareBasisCoefficients<T>> {
    let (wp, wm) = hopfield_frequencies(params)?;
    let (wa, wb, g) = (params.omega_a(), params.omega_b(), params.g());
    let wc = params.omega_c();
    let omega = [wp, wm];
    let (dp, dm) = detunings(wa * wa + wc * wc - wb * wb, wb, wc);
    let d = [dp, dm];
    let mut out = BareBasisCoefficients {
        omega,
        tau: [T::zero(); 2],
        chi: [T::zero(); 2],
        lambda: [T::zero(); 2],
        epsilon: [T::zero(); 2],
        vartheta: [T::zero(); 2],
        omega_c_sq_chi: [T::zero(); 2],
        delta: T::zero(),
        omega_c: wc,
    };
    if g == T::zero() {
        check_split(wp, wm)?;
        // Limits as g → 0: the mode sitting at ω_b is pure matter.
        let matter = if wa > wb { 1 } else { 0 };
        let photon = 1 - matter;
        let dph = wa * wa - wb * wb;
        out.tau[photon] = T::one();
        out.chi[photon] = T::one() / (dph * dph);
        out.vartheta[photon] = T::one() / dph;
        out.chi[matter] = T::infinity();
        out.lambda[matter] = T::one();
        out.epsilon[matter] = T::one();
        out.vartheta[matter] = -T::one() / dph;
        out.omega_c_sq_chi[matter] = T::one() / (wb * wb);
        return Ok(out);
    }
    for j in 0..2 {
        let den = (wc * wb).powi(2) + d[j] * d[j];
        let chi = T::one() / den;
        out.tau[j] = d[j] * d[j] * chi;
        out.chi[j] = chi;
        out.lambda[j] = wc * wb * wb.sqrt() * (chi / omega[j]).sqrt();
        out.epsilon[j] = wc * (omega[j] * wb * chi).sqrt();
        out.vartheta[j] = d[j] * chi;
        out.omega_c_sq_chi[j] = wc * wc * chi;
    }
    out.delta = g * (omega[0] * out.vartheta[0] + omega[1] * out.vartheta[1]);
    Ok(out)
}

/// `S` assembled directly from the auxiliary coefficients.
///
/// The published matrix carries a minus sign on the `−` mode in its first
/// two rows, which makes it fail `S Ω Sᵀ = Ω`; both signs there are `+`
/// here. With that choice this matrix coincides with the transform built
/// from the closed-form coefficient vectors.
pub fn bare_transform<T: Real>(params: &ModelParams<T>) -> Result<Matrix4<T>> {
    let c = bare_coefficients(params)?;
    let wa = params.omega_a();
    let [wp, wm] = c.omega;
    let z = T::zero();
    Ok(Matrix4::new(
        (wa * c.tau[0] / wp).sqrt(),
        z,
        (wa * c.tau[1] / wm).sqrt(),
        z, //
        z,
        (wp * c.tau[0] / wa).sqrt(),
        z,
        (wm * c.tau[1] / wa).sqrt(), //
        z,
        c.epsilon[0],
        z,
        -c.epsilon[1], //
        -c.lambda[0],
        z,
        c.lambda[1],
        z,
    ))
}
