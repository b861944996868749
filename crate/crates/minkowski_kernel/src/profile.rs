use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::KernelError;

/// Fraction of `|phi|^2` allowed in the last 5% of the momentum range.
pub const TAIL_LIMIT: f64 = 1e-8;

/// Radial momentum profile `phi(k_j)`, `k_j = j k_max / (n - 1)`, normalised so
/// that the one-particle product is `int_0^k_max conj(phi_f) phi_g dk`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentumProfile {
    pub k_max: f64,
    pub values: Vec<Complex64>,
}

impl MomentumProfile {
    /// Samples `f` on `n` points; `n` is bumped to the next odd number for Simpson.
    pub fn sample(k_max: f64, n: usize, f: impl Fn(f64) -> Complex64) -> Self {
        let n = if n % 2 == 0 { n + 1 } else { n };
        let values = (0..n).map(|j| f(k_max * j as f64 / (n - 1) as f64)).collect();
        MomentumProfile { k_max, values }
    }

    fn step(&self) -> f64 {
        self.k_max / (self.values.len() - 1) as f64
    }

    fn check(&self) -> Result<(), KernelError> {
        let n = self.values.len();
        if n < 3 || n % 2 == 0 {
            return Err(KernelError::InvalidInput { key: "values", reason: format!("need an odd number >= 3 of samples, got {n}") });
        }
        if !(self.k_max.is_finite() && self.k_max > 0.0) {
            return Err(KernelError::InvalidInput { key: "k_max", reason: "must be positive".into() });
        }
        let total: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        let tail: f64 = self.values[n - n / 20 - 1..].iter().map(|v| v.norm_sqr()).sum();
        if total > 0.0 && tail / total > TAIL_LIMIT {
            return Err(KernelError::TailTruncation { tail_fraction: tail / total });
        }
        Ok(())
    }
}

/// Radial profile of spherically symmetric Cauchy data with 3d Fourier
/// transforms `psi_hat`, `pi_hat` (convention `(2 pi)^{-3/2} int e^{-ikx}`):
/// `sqrt(4 pi) k (w psi_hat + i pi_hat) / sqrt(2 w)`.
pub fn profile_from_cauchy(
    m: f64,
    k_max: f64,
    n: usize,
    psi_hat: impl Fn(f64) -> f64,
    pi_hat: impl Fn(f64) -> f64,
) -> MomentumProfile {
    MomentumProfile::sample(k_max, n, |k| {
        let w = (k * k + m * m).sqrt();
        if w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::new(w * psi_hat(k), pi_hat(k)) * ((4.0 * PI).sqrt() * k / (2.0 * w).sqrt())
    })
}

fn product(f: &MomentumProfile, g: &MomentumProfile) -> Result<Complex64, KernelError> {
    f.check()?;
    g.check()?;
    if f.values.len() != g.values.len() || f.k_max != g.k_max {
        return Err(KernelError::InvalidInput { key: "values", reason: "profiles on different grids".into() });
    }
    let n = f.values.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let w = if j == 0 || j == n - 1 { 1.0 } else if j % 2 == 1 { 4.0 } else { 2.0 };
        acc += f.values[j].conj() * g.values[j] * w;
    }
    Ok(acc * (f.step() / 3.0))
}

/// `mu(f, g) = Re <phi_f | phi_g>`.
pub fn mu_minkowski(f: &MomentumProfile, g: &MomentumProfile) -> Result<f64, KernelError> {
    Ok(product(f, g)?.re)
}

/// `tau(f, g) = 2 Im <phi_f | phi_g>`, the symplectic form of the Cauchy data.
pub fn tau_minkowski(f: &MomentumProfile, g: &MomentumProfile) -> Result<f64, KernelError> {
    Ok(2.0 * product(f, g)?.im)
}

/// `mu(f,f) mu(g,g) - tau(f,g)^2 / 4`, non-negative for any pair.
pub fn uncertainty_margin(f: &MomentumProfile, g: &MomentumProfile) -> Result<f64, KernelError> {
    let t = tau_minkowski(f, g)?;
    Ok(mu_minkowski(f, f)? * mu_minkowski(g, g)? - 0.25 * t * t)
}
