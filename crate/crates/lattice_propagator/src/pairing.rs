use crate::config::LatticeConfig;
use crate::error::LatticeError;
use crate::field::LatticeField;
use crate::solver::causal_e;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// `(<f, E g> - <g, E f>) / 2` with cell volume `a dt`.
    Volume,
    /// Centered Wronskian of `E f` and `E g` on time level `slice`.
    Surface { slice: usize },
}

/// `a sum_j [u^s (v^{s+1} - v^{s-1}) - v^s (u^{s+1} - u^{s-1})] / (2 dt)`.
///
/// For leapfrog solutions this is independent of `s` up to rounding.
pub fn wronskian(cfg: &LatticeConfig, u: &LatticeField, v: &LatticeField, slice: usize) -> Result<f64, LatticeError> {
    u.check_shape(cfg)?;
    v.check_shape(cfg)?;
    if slice == 0 || slice >= cfg.t_steps {
        return Err(LatticeError::InvalidSlice { slice, reason: format!("must lie in 1..={}", cfg.t_steps - 1) });
    }
    let (u0, u1, u2) = (u.level(slice - 1), u.level(slice), u.level(slice + 1));
    let (v0, v1, v2) = (v.level(slice - 1), v.level(slice), v.level(slice + 1));
    let sum: f64 = (0..cfg.n_x).map(|j| u1[j] * (v2[j] - v0[j]) - v1[j] * (u2[j] - u0[j])).sum();
    Ok(cfg.a * sum / (2.0 * cfg.dt))
}

fn slice_clear(f: &LatticeField, slice: usize) -> bool {
    match f.support() {
        None => true,
        Some(s) => slice + 1 < s.s_min || slice > s.s_max + 1,
    }
}

pub fn pair_e(cfg: &LatticeConfig, f: &LatticeField, g: &LatticeField, method: Method) -> Result<f64, LatticeError> {
    let ef = causal_e(cfg, f)?;
    let eg = causal_e(cfg, g)?;
    match method {
        Method::Volume => Ok(0.5 * (f.inner(&eg, cfg) - g.inner(&ef, cfg))),
        Method::Surface { slice } => {
            if !slice_clear(f, slice) || !slice_clear(g, slice) {
                return Err(LatticeError::InvalidSlice { slice, reason: "levels slice-1..=slice+1 meet a support".into() });
            }
            wronskian(cfg, &ef, &eg, slice)
        }
    }
}

/// Observed order `log2(|q_h - q_{h/2}| / |q_{h/2} - q_{h/4}|)` from three
/// successively halved resolutions.
pub fn richardson_order(coarse: f64, mid: f64, fine: f64) -> f64 {
    ((coarse - mid).abs() / (mid - fine).abs()).log2()
}

/// Richardson extrapolation for a second-order sequence.
pub fn richardson_extrapolate(mid: f64, fine: f64) -> f64 {
    fine + (fine - mid) / 3.0
}
