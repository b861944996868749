use minkowski_kernel::{remainder_w, KernelParams, SeparationPoint};

use crate::error::WickError;

/// `<:phi^2:_H(x)>` for the state with two-point function `omega_vac + s`: the
/// coincidence limit of `omega_vac + s - H` along a spacelike ladder
/// `r = r_0 2^{-j}`, extrapolated polynomially in `r^2`. `s` must be smooth
/// and symmetric.
pub fn phi2_h_expectation(params: &KernelParams, s: impl Fn(&SeparationPoint) -> f64) -> Result<f64, WickError> {
    let params = KernelParams { eps: 0.0, ..*params };
    params.validate()?;
    let scale = if params.m > 0.0 { params.lambda.min(1.0 / params.m) } else { params.lambda };
    let r0 = 0.05 * scale;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for j in 0..4 {
        let p = SeparationPoint { dt: 0.0, r: r0 / f64::powi(2.0, j) };
        xs.push(p.r * p.r);
        ys.push(remainder_w(&p, &params)?.re + s(&p));
    }
    // Neville at r^2 = 0
    let n = xs.len();
    for level in 1..n {
        for i in 0..n - level {
            ys[i] = (ys[i] * xs[i + level] - ys[i + 1] * xs[i]) / (xs[i + level] - xs[i]);
        }
    }
    Ok(ys[0])
}
