use num_complex::Complex64;

use crate::config::{Boundary, LatticeConfig};
use crate::error::LatticeError;
use crate::field::LatticeField;

/// Semi-discrete dispersion `omega^2 = m^2 + (2/a)^2 sin^2(k a / 2)`.
pub fn lattice_omega(cfg: &LatticeConfig, k: f64) -> f64 {
    (cfg.m * cfg.m + (2.0 / cfg.a * (k * cfg.a / 2.0).sin()).powi(2)).sqrt()
}

/// Phase advance per leapfrog step, `cos(theta) = 1 - dt^2 omega^2 / 2`.
pub fn leapfrog_phase(cfg: &LatticeConfig, k: f64) -> f64 {
    let w = lattice_omega(cfg, k);
    (1.0 - 0.5 * cfg.dt * cfg.dt * w * w).clamp(-1.0, 1.0).acos()
}

/// Wave numbers `2 pi n / (n_x a)` of a periodic ring.
pub fn ring_momenta(cfg: &LatticeConfig) -> Vec<f64> {
    let len = cfg.n_x as f64 * cfg.a;
    (0..cfg.n_x).map(|n| 2.0 * std::f64::consts::PI * n as f64 / len).collect()
}

/// Vacuum two-point function of the periodic leapfrog lattice,
///
/// `omega(f, g) = a dt / n_x sum_k dt^2 / (2 sin theta_k) A_k(f) conj(A_k(g))`
/// with `A_k(f) = sum_{s,j} f e^{i k a j - i s theta_k}`.
///
/// Its imaginary part is half the volume pairing of the same lattice.
pub fn mode_two_point(cfg: &LatticeConfig, f: &LatticeField, g: &LatticeField) -> Result<Complex64, LatticeError> {
    cfg.validate()?;
    f.check_shape(cfg)?;
    g.check_shape(cfg)?;
    if !matches!(cfg.boundary, Boundary::Periodic) {
        return Err(LatticeError::InvalidParameter { key: "boundary", reason: "mode sums need a periodic ring".into() });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for k in ring_momenta(cfg) {
        let theta = leapfrog_phase(cfg, k);
        let st = theta.sin();
        if st <= 1e-12 {
            return Err(LatticeError::InvalidParameter {
                key: "m",
                reason: format!("mode k = {k} has no positive frequency on this lattice"),
            });
        }
        let amp = |h: &LatticeField| {
            let mut acc = Complex64::new(0.0, 0.0);
            for s in 0..h.n_t {
                let row = h.level(s);
                if row.iter().all(|v| *v == 0.0) {
                    continue;
                }
                let spatial: Complex64 = row
                    .iter()
                    .enumerate()
                    .map(|(j, v)| Complex64::from_polar(*v, k * cfg.a * j as f64))
                    .sum();
                acc += spatial * Complex64::from_polar(1.0, -(s as f64) * theta);
            }
            acc
        };
        total += amp(f) * amp(g).conj() * (cfg.dt * cfg.dt / (2.0 * st));
    }
    Ok(total * (cfg.cell_volume() / cfg.n_x as f64))
}
