use num_complex::Complex64;
use serde::Serialize;

use crate::error::KernelError;
use crate::grid::radial_ladder;
use crate::kernel::{omega2_bessel, remainder_w, KernelParams, SeparationPoint};

/// `w` and its central differences in `r` at `dt = 0`, step `r / 4`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LadderSample {
    pub r: f64,
    pub w: Complex64,
    pub dw: Complex64,
    pub d2w: Complex64,
}

fn sample_with(
    r: f64,
    f: &impl Fn(&SeparationPoint) -> Result<Complex64, KernelError>,
) -> Result<LadderSample, KernelError> {
    let h = r / 4.0;
    let at = |x: f64| f(&SeparationPoint { dt: 0.0, r: x });
    let (lo, mid, hi) = (at(r - h)?, at(r)?, at(r + h)?);
    Ok(LadderSample { r, w: mid, dw: (hi - lo) / (2.0 * h), d2w: (hi - 2.0 * mid + lo) / (h * h) })
}

/// Remainder samples on the spacelike ladder `r = r_max 2^{-j} >= r_min`.
pub fn remainder_ladder(params: &KernelParams, r_min: f64, r_max: f64) -> Result<Vec<LadderSample>, KernelError> {
    radial_ladder(r_min, r_max).iter().map(|p| sample_with(p.r, &|q| remainder_w(q, params))).collect()
}

/// The same ladder for the unsubtracted kernel, a control that must grow.
pub fn kernel_ladder(params: &KernelParams, r_min: f64, r_max: f64) -> Result<Vec<LadderSample>, KernelError> {
    radial_ladder(r_min, r_max).iter().map(|p| sample_with(p.r, &|q| omega2_bessel(q, params))).collect()
}

/// `max |q|` over the finer half of a ladder divided by `max |q|` over the
/// coarser half; values above 2 count as growth.
pub fn growth_ratio(values: &[f64]) -> f64 {
    let half = values.len() / 2;
    let coarse = values[..half].iter().cloned().fold(0.0, f64::max);
    let fine = values[half..].iter().cloned().fold(0.0, f64::max);
    fine / coarse
}

/// Growth ratios of `|w|`, `|dw/dr|` and `|d^2 w/dr^2|` along a ladder.
pub fn ladder_growth(samples: &[LadderSample]) -> [f64; 3] {
    let col = |f: fn(&LadderSample) -> f64| growth_ratio(&samples.iter().map(f).collect::<Vec<_>>());
    [col(|s| s.w.norm()), col(|s| s.dw.norm()), col(|s| s.d2w.norm())]
}
