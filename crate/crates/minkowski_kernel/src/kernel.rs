use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::bessel::bessel_k1;
use crate::error::KernelError;

pub const MAX_ORDER: usize = 8;
/// `|sigma| <= NULL_TOL (r^2 + dt^2)` counts as null at `eps = 0`.
pub const NULL_TOL: f64 = 1e-12;

/// Relative position `y - x` reduced to time difference and spatial distance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparationPoint {
    pub dt: f64,
    pub r: f64,
}

impl SeparationPoint {
    pub fn new(dt: f64, r: f64) -> Result<Self, KernelError> {
        if !dt.is_finite() {
            return Err(KernelError::InvalidInput { key: "dt", reason: "must be finite".into() });
        }
        if !(r.is_finite() && r >= 0.0) {
            return Err(KernelError::InvalidInput { key: "r", reason: "spatial distance must be finite and >= 0".into() });
        }
        Ok(SeparationPoint { dt, r })
    }

    /// `r^2 - dt^2`: positive spacelike, negative timelike.
    pub fn sigma(&self) -> f64 {
        self.r * self.r - self.dt * self.dt
    }

    /// The separation seen from the other point.
    pub fn swapped(&self) -> Self {
        SeparationPoint { dt: -self.dt, r: self.r }
    }

    pub fn is_null(&self) -> bool {
        self.sigma().abs() <= NULL_TOL * (self.r * self.r + self.dt * self.dt)
    }

    /// Distance `| |dt| - r |` to the light cone, the radius of analyticity of
    /// the kernel as a function of the regulator.
    pub fn cone_distance(&self) -> f64 {
        (self.dt.abs() - self.r).abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    /// Mass; `0` selects the massless kernel.
    pub m: f64,
    /// Regulator; `0` means the boundary value (off the cone only).
    pub eps: f64,
    /// Length scale inside the parametrix logarithm.
    pub lambda: f64,
    /// Parametrix order `N`.
    pub order: usize,
}

impl Default for KernelParams {
    fn default() -> Self {
        KernelParams { m: 1.0, eps: 0.0, lambda: 1.0, order: 3 }
    }
}

impl KernelParams {
    /// `lambda = 1/m`, `eps = 0`, `N = 3`.
    pub fn massive(m: f64) -> Self {
        KernelParams { m, eps: 0.0, lambda: 1.0 / m, order: 3 }
    }

    pub fn validate(&self) -> Result<(), KernelError> {
        if !(self.m.is_finite() && self.m >= 0.0) {
            return Err(KernelError::InvalidInput { key: "m", reason: "mass must be finite and >= 0".into() });
        }
        if !(self.eps.is_finite() && self.eps >= 0.0) {
            return Err(KernelError::InvalidInput { key: "eps", reason: "regulator must be finite and >= 0".into() });
        }
        if !(self.lambda.is_finite() && self.lambda > 0.0) {
            return Err(KernelError::InvalidInput { key: "lambda", reason: "length scale must be positive".into() });
        }
        if self.order > MAX_ORDER {
            return Err(KernelError::OrderGuard { order: self.order });
        }
        Ok(())
    }
}

/// `sigma_eps = r^2 - dt^2 + 2 i eps dt + eps^2 = r^2 - (dt - i eps)^2`.
pub fn sigma_eps(p: &SeparationPoint, eps: f64) -> Complex64 {
    Complex64::new(p.sigma() + eps * eps, 2.0 * eps * p.dt)
}

fn check_off_cone(p: &SeparationPoint, eps: f64) -> Result<(), KernelError> {
    if eps == 0.0 && p.is_null() {
        return Err(KernelError::OnLightconeSingular { dt: p.dt, r: p.r });
    }
    Ok(())
}

/// `sqrt(sigma_eps)` on the principal branch; at `eps = 0` timelike points get
/// the limit from `eps > 0`, `i sgn(dt) sqrt|sigma|`.
fn sqrt_sigma(p: &SeparationPoint, eps: f64) -> Complex64 {
    if eps > 0.0 {
        return sigma_eps(p, eps).sqrt();
    }
    let s = p.sigma();
    if s >= 0.0 {
        Complex64::new(s.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, p.dt.signum() * (-s).sqrt())
    }
}

/// `log(sigma_eps / lambda^2)` with the same branch rule as [`sqrt_sigma`].
fn log_sigma(p: &SeparationPoint, eps: f64, lambda: f64) -> Complex64 {
    if eps > 0.0 {
        return (sigma_eps(p, eps) / (lambda * lambda)).ln();
    }
    let s = p.sigma();
    let re = (s.abs() / (lambda * lambda)).ln();
    if s >= 0.0 {
        Complex64::new(re, 0.0)
    } else {
        Complex64::new(re, PI * p.dt.signum())
    }
}

/// Closed form `m^2/(4 pi^2) K_1(z)/z`, `z = m sqrt(sigma_eps)`; the
/// massless kernel is `1/(4 pi^2 sigma_eps)`.
pub fn omega2_bessel(p: &SeparationPoint, params: &KernelParams) -> Result<Complex64, KernelError> {
    params.validate()?;
    check_off_cone(p, params.eps)?;
    let root = sqrt_sigma(p, params.eps);
    if params.m == 0.0 {
        return Ok((root * root).inv() / (4.0 * PI * PI));
    }
    let z = params.m * root;
    Ok(params.m * params.m / (4.0 * PI * PI) * bessel_k1(z) / z)
}

/// `v_k = m^2/(16 pi^2) (m^2/4)^k / (k! (k+1)!)` for `k = 0..=order`.
pub fn hadamard_coefficients(m: f64, order: usize) -> Result<Vec<f64>, KernelError> {
    if order > MAX_ORDER {
        return Err(KernelError::OrderGuard { order });
    }
    let mut v = Vec::with_capacity(order + 1);
    let mut cur = m * m / (16.0 * PI * PI);
    for k in 0..=order {
        if k > 0 {
            cur *= m * m / 4.0 / (k * (k + 1)) as f64;
        }
        v.push(cur);
    }
    Ok(v)
}

/// Parametrix `1/(4 pi^2 sigma_eps) + sum_{k<=N} v_k sigma^k log(sigma_eps/lambda^2)`
/// (powers of the unregularised `sigma`).
pub fn hadamard_h(p: &SeparationPoint, params: &KernelParams) -> Result<Complex64, KernelError> {
    params.validate()?;
    check_off_cone(p, params.eps)?;
    let root = sqrt_sigma(p, params.eps);
    let mut h = (root * root).inv() / (4.0 * PI * PI);
    if params.m > 0.0 {
        h += log_sigma(p, params.eps, params.lambda) * smooth_sum(p, params)?;
    }
    Ok(h)
}

/// `sum_{k<=N} v_k sigma^k`.
fn smooth_sum(p: &SeparationPoint, params: &KernelParams) -> Result<f64, KernelError> {
    let s = p.sigma();
    let v = hadamard_coefficients(params.m, params.order)?;
    Ok(v.iter().rev().fold(0.0, |acc, vk| acc * s + vk))
}

/// `w = omega2_bessel - H^(N)`.
pub fn remainder_w(p: &SeparationPoint, params: &KernelParams) -> Result<Complex64, KernelError> {
    Ok(omega2_bessel(p, params)? - hadamard_h(p, params)?)
}

/// Predicted change `w_{lambda'} - w_lambda = -sum v_k sigma^k log(lambda^2/lambda'^2)`.
pub fn lambda_shift(p: &SeparationPoint, params: &KernelParams, lambda_new: f64) -> Result<f64, KernelError> {
    params.validate()?;
    if !(lambda_new.is_finite() && lambda_new > 0.0) {
        return Err(KernelError::InvalidInput { key: "lambda", reason: "length scale must be positive".into() });
    }
    Ok(-smooth_sum(p, params)? * (params.lambda * params.lambda / (lambda_new * lambda_new)).ln())
}

/// `lim_{x -> y} w` from the small-argument expansion of `K_1`:
/// `m^2/(16 pi^2) (ln(m^2 lambda^2 / 4) - 1 + 2 gamma)`.
pub fn remainder_coincidence(m: f64, lambda: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    m * m / (16.0 * PI * PI) * ((m * m * lambda * lambda / 4.0).ln() - 1.0 + 2.0 * EULER_GAMMA)
}

/// Symmetric part of `w` as a function of the real `sigma`, from the series
///
/// `w = sum_k v_k sigma^k (L_k - psi(k+1) - psi(k+2))` with
/// `L_k = ln(m^2 lambda^2 / 4)` for `k <= N` and `ln(m^2 |sigma| / 4)` beyond,
///
/// finite on the cone (the `k > N` terms vanish at `sigma = 0`). Off the cone it
/// equals `Re remainder_w` at `eps = 0`.
pub fn remainder_symmetric(sigma: f64, params: &KernelParams) -> Result<f64, KernelError> {
    params.validate()?;
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let m2 = params.m * params.m;
    let inner = (m2 * params.lambda * params.lambda / 4.0).ln();
    let outer = if sigma == 0.0 { 0.0 } else { (m2 * sigma.abs() / 4.0).ln() };
    let mut term = m2 / (16.0 * PI * PI);
    let mut harmonic = 0.0;
    let mut total = 0.0;
    for k in 0..80 {
        if k > 0 {
            term *= m2 * sigma / 4.0 / (k * (k + 1)) as f64;
            harmonic += 1.0 / k as f64;
        }
        let psi = -2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (k + 1) as f64;
        let log = if k <= params.order { inner } else { outer };
        let add = term * (log - psi);
        total += add;
        if k > params.order && add.abs() <= 1e-18 * total.abs().max(term.abs()) {
            break;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(dt: f64, r: f64) -> SeparationPoint {
        SeparationPoint::new(dt, r).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_eps(&pt(0.0, 2.0), 0.0), Complex64::new(4.0, 0.0));
        assert_eq!(sigma_eps(&pt(3.0, 0.0), 0.0), Complex64::new(-9.0, 0.0));
        let s = sigma_eps(&pt(1.0, 1.0), 0.1);
        assert!((s - Complex64::new(0.01, 0.2)).norm() < 1e-15);
    }

    #[test]
    fn coefficients() {
        let v = hadamard_coefficients(2.0, 3).unwrap();
        assert!((v[0] - 4.0 / (16.0 * PI * PI)).abs() < 1e-16);
        assert!((v[1] / v[0] - 4.0 / 8.0).abs() < 1e-15);
        assert!(matches!(hadamard_coefficients(1.0, 9), Err(KernelError::OrderGuard { order: 9 })));
    }

    #[test]
    fn boundary_value_is_eps_limit() {
        let params = KernelParams::massive(1.0);
        for p in [pt(2.0, 0.5), pt(-2.0, 0.5), pt(0.3, 1.0)] {
            let exact = omega2_bessel(&p, &params).unwrap();
            let near = omega2_bessel(&p, &KernelParams { eps: 1e-9, ..params }).unwrap();
            assert!((exact - near).norm() < 1e-7 * exact.norm(), "{p:?}: {exact} {near}");
            let h0 = hadamard_h(&p, &params).unwrap();
            let h1 = hadamard_h(&p, &KernelParams { eps: 1e-9, ..params }).unwrap();
            assert!((h0 - h1).norm() < 1e-7 * h0.norm());
        }
    }

    #[test]
    fn series_remainder_matches_subtraction() {
        let params = KernelParams::massive(1.3);
        for p in [pt(0.0, 0.4), pt(0.9, 0.2), pt(-0.3, 1.1), pt(2.0, 0.0)] {
            let direct = remainder_w(&p, &params).unwrap().re;
            let series = remainder_symmetric(p.sigma(), &params).unwrap();
            assert!((direct - series).abs() < 1e-11, "{p:?}: {direct} {series}");
        }
        let at_zero = remainder_symmetric(0.0, &params).unwrap();
        assert!((at_zero - remainder_coincidence(1.3, 1.0 / 1.3)).abs() < 1e-16);
    }

    #[test]
    fn null_points_rejected() {
        let params = KernelParams::massive(1.0);
        assert!(matches!(omega2_bessel(&pt(1.0, 1.0), &params), Err(KernelError::OnLightconeSingular { .. })));
        assert!(matches!(omega2_bessel(&pt(0.0, 0.0), &params), Err(KernelError::OnLightconeSingular { .. })));
        assert!(omega2_bessel(&pt(1.0, 1.0), &KernelParams { eps: 0.1, ..params }).is_ok());
    }
}
