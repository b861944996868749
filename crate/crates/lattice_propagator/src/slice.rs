use crate::config::LatticeConfig;
use crate::error::LatticeError;
use crate::field::LatticeField;
use crate::solver::{apply_kg, causal_e, evolve_homogeneous, spatial};

/// Field value and time derivative on the level `level`.
#[derive(Clone, Debug, PartialEq)]
pub struct CauchyData {
    pub level: usize,
    pub psi: Vec<f64>,
    pub pi: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct SliceCompression {
    /// `f = P(chi psi)`, supported in the window.
    pub source: LatticeField,
    /// The homogeneous solution carrying the Cauchy data.
    pub solution: LatticeField,
    /// `max |E f - psi| / max |psi|` over the grid.
    pub reconstruction_error: f64,
}

/// Quintic smoothstep falling from 1 at `lo` to 0 at `hi`.
pub fn chi(t: f64, lo: f64, hi: f64) -> f64 {
    let u = ((t - lo) / (hi - lo)).clamp(0.0, 1.0);
    1.0 - u * u * u * (10.0 - 15.0 * u + 6.0 * u * u)
}

/// Second level from Cauchy data by the Taylor step
/// `psi + dt pi + dt^2 (L - m^2) psi / 2`.
pub fn solution_from_cauchy(cfg: &LatticeConfig, data: &CauchyData) -> Result<LatticeField, LatticeError> {
    if data.psi.len() != cfg.n_x || data.pi.len() != cfg.n_x {
        return Err(LatticeError::Shape { got_t: 1, got_x: data.psi.len(), want_t: 1, want_x: cfg.n_x });
    }
    let mut lu = vec![0.0; cfg.n_x];
    spatial(cfg, &data.psi, &mut lu);
    let dt = cfg.dt;
    let next: Vec<f64> = (0..cfg.n_x).map(|j| data.psi[j] + dt * data.pi[j] + 0.5 * dt * dt * lu[j]).collect();
    evolve_homogeneous(cfg, data.level, &data.psi, &next)
}

/// Source `f` inside the time window `lo..=hi` (levels) whose causal
/// propagator reproduces the solution with the given Cauchy data.
pub fn slice_compress(
    cfg: &LatticeConfig,
    data: &CauchyData,
    window: (usize, usize),
) -> Result<SliceCompression, LatticeError> {
    let (lo, hi) = window;
    if hi < lo + 4 {
        return Err(LatticeError::WindowTooThin { width: hi.saturating_sub(lo) });
    }
    if lo < 2 || hi + 2 > cfg.t_steps {
        return Err(LatticeError::InvalidSlice { slice: lo, reason: format!("window must lie in 2..={}", cfg.t_steps - 2) });
    }
    let psi = solution_from_cauchy(cfg, data)?;
    let (tlo, thi) = (cfg.t(lo), cfg.t(hi));
    let mut cut = psi.clone();
    for s in 0..cfg.n_t() {
        let c = chi(cfg.t(s), tlo, thi);
        for v in cut.level_mut(s) {
            *v *= c;
        }
    }
    let mut source = apply_kg(cfg, &cut)?;
    // P psi vanishes up to rounding outside the window; make that exact
    for s in 0..cfg.n_t() {
        if s < lo || s > hi {
            source.level_mut(s).fill(0.0);
        }
    }
    let back = causal_e(cfg, &source)?;
    let scale = psi.max_abs();
    let reconstruction_error = if scale == 0.0 { (&back - &psi).max_abs() } else { (&back - &psi).max_abs() / scale };
    Ok(SliceCompression { source, solution: psi, reconstruction_error })
}
