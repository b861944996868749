use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::KernelError;
use crate::kernel::{KernelParams, SeparationPoint};
use crate::quadrature::{extrapolate_to_zero, integrate, Wynn};

/// Relative stopping tolerance on the accelerated panel sums.
pub const QUAD_TOL: f64 = 1e-13;
pub const MAX_PANELS: usize = 20_000;
/// Regulator ladder `eps_j = EPS_START d / 2^j`, `d` the distance to the cone.
pub const EPS_START: f64 = 0.1;
pub const EPS_RUNGS: usize = 6;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `e^z - 1` without cancellation for small `z`.
fn expm1(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        2.0 * (z / 2.0).exp() * (z / 2.0).sinh()
    } else {
        z.exp() - 1.0
    }
}

/// `int_0^inf f`, with `f` asymptotically oscillating at rate `rate` and damped
/// as `e^{-eps k}`. The partial sums over half periods (or damping lengths, if
/// shorter) are accelerated with Wynn's algorithm.
fn oscillatory<F: Fn(f64) -> Complex64>(
    f: &F,
    rate: f64,
    eps: f64,
    h_max: f64,
    floor: f64,
) -> Result<Complex64, KernelError> {
    let half = (PI / rate.abs()).min(if eps > 0.0 { 2.0 / eps } else { f64::INFINITY });
    let mut wynn = Wynn::new();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    let mut change = f64::INFINITY;
    for n in 0..MAX_PANELS {
        let a = n as f64 * half;
        let piece = integrate(f, a, a + half, h_max.min(half));
        sum += piece;
        let est = wynn.push(sum);
        change = (est - last).norm();
        let tol = QUAD_TOL * est.norm().max(floor);
        // a panel that contributes nothing beyond rounding ends the integral as well
        if n >= 4 && (change <= tol || piece.norm() <= 1e-3 * tol) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(if piece.norm() <= 1e-3 * tol { sum } else { est });
            }
        } else {
            quiet = 0;
        }
        last = est;
    }
    Err(KernelError::QuadratureFailure { residual: change, panels: MAX_PANELS })
}

/// Mode integral at a fixed regulator:
///
/// `omega = 1/(4 pi^2 r) int_0^inf dk k sin(kr) e^{-i w_k (dt - i eps)} / w_k`,
/// `w_k = sqrt(k^2 + m^2)`.
///
/// The massless integrand is subtracted and added back in closed form
/// `r / (r^2 - (dt - i eps)^2)`, so the remaining integrand decays like `1/k`.
pub fn omega2_fourier_at(p: &SeparationPoint, m: f64, eps: f64) -> Result<Complex64, KernelError> {
    if p.r <= 0.0 {
        return Err(KernelError::InvalidInput { key: "r", reason: "the radial mode integral needs r > 0".into() });
    }
    if eps == 0.0 && p.is_null() {
        return Err(KernelError::OnLightconeSingular { dt: p.dt, r: p.r });
    }
    let r = p.r;
    let tau = Complex64::new(p.dt, -eps);
    let massless = r / (r * r - tau * tau);
    if m == 0.0 {
        return Ok(massless / (4.0 * PI * PI * r));
    }
    // (k/w) e^{-i w tau} - e^{-i k tau}, written through delta = w - k
    let diff = move |k: f64| {
        let w = (k * k + m * m).sqrt();
        let delta = m * m / (w + k);
        let phase = expm1(-I * delta * tau);
        (-I * k * tau).exp() * (phase - (delta / w) * (phase + 1.0))
    };
    let h_max = 1.0 / (r + p.dt.abs() + m);
    let floor = massless.norm();
    let plus = oscillatory(&|k: f64| Complex64::from_polar(1.0, k * r) * diff(k), r - p.dt, eps, h_max, floor)?;
    let minus = oscillatory(&|k: f64| Complex64::from_polar(1.0, -k * r) * diff(k), r + p.dt, eps, h_max, floor)?;
    let rem = (plus - minus) / (2.0 * I);
    Ok((massless + rem) / (4.0 * PI * PI * r))
}

/// Mode-integral form of the two-point function. With `params.eps > 0` this is
/// the regulated value; with `eps = 0` the boundary value is extrapolated from a
/// ladder of regulators.
pub fn omega2_fourier(p: &SeparationPoint, params: &KernelParams) -> Result<Complex64, KernelError> {
    params.validate()?;
    if params.eps > 0.0 {
        return omega2_fourier_at(p, params.m, params.eps);
    }
    if p.is_null() {
        return Err(KernelError::OnLightconeSingular { dt: p.dt, r: p.r });
    }
    let (xs, ys) = eps_ladder(p, params.m)?;
    Ok(extrapolate_to_zero(&xs, &ys))
}

/// The regulated values behind [`omega2_fourier`] at `eps = 0`.
pub fn eps_ladder(p: &SeparationPoint, m: f64) -> Result<(Vec<f64>, Vec<Complex64>), KernelError> {
    let d = p.cone_distance();
    let xs: Vec<f64> = (0..EPS_RUNGS).map(|j| EPS_START * d / f64::powi(2.0, j as i32)).collect();
    let ys = xs.iter().map(|e| omega2_fourier_at(p, m, *e)).collect::<Result<Vec<_>, _>>()?;
    Ok((xs, ys))
}

/// Commutator function `omega(x, y) - omega(y, x)` from the same mode integral;
/// at matching regulator this is the `sin(w_k dt)` integral.
pub fn commutator_fourier(p: &SeparationPoint, params: &KernelParams) -> Result<Complex64, KernelError> {
    Ok(omega2_fourier(p, params)? - omega2_fourier(&p.swapped(), params)?)
}
