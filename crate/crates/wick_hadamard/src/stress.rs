//! Point-split stress-energy on flat space, signature `(+,-,-,-)`:
//!
//! `T_ab = lim_{y->x} D_ab w(x, y)`, `D_ab = D^can_ab - g_ab P_x / 3`,
//! `D^can_ab = (1-2 xi) d_a d_b' - 2 xi d_a d_b + g_ab {2 xi box_x + (2 xi - 1/2) d^c d_c' + m^2/2}`,
//! `P_x = box_x + m^2`. Primed derivatives act on `y`.

use minkowski_kernel::{remainder_symmetric, KernelParams};
use serde::Serialize;

use crate::error::WickError;

pub type Event = [f64; 4];
pub type Tensor2 = [[f64; 4]; 4];

/// Diagonal of the metric.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Smooth symmetric two-point kernel, typically a Hadamard remainder.
pub trait SplitKernel {
    fn eval(&self, x: &Event, y: &Event) -> f64;
}

impl<F: Fn(&Event, &Event) -> f64> SplitKernel for F {
    fn eval(&self, x: &Event, y: &Event) -> f64 {
        self(x, y)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ConstantKernel(pub f64);

impl SplitKernel for ConstantKernel {
    fn eval(&self, _: &Event, _: &Event) -> f64 {
        self.0
    }
}

/// `w(x, y) = f(x - y)`; `f` should be even.
#[derive(Clone, Copy, Debug)]
pub struct TranslationInvariant<F>(pub F);

impl<F: Fn(&Event) -> f64> SplitKernel for TranslationInvariant<F> {
    fn eval(&self, x: &Event, y: &Event) -> f64 {
        (self.0)(&[x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]])
    }
}

/// Symmetric Hadamard remainder of the Minkowski vacuum, a function of
/// `sigma = |x - y|^2_spatial - (x^0 - y^0)^2`.
#[derive(Clone, Copy, Debug)]
pub struct MinkowskiRemainder(pub KernelParams);

impl SplitKernel for MinkowskiRemainder {
    fn eval(&self, x: &Event, y: &Event) -> f64 {
        let d: Vec<f64> = (0..4).map(|i| x[i] - y[i]).collect();
        let sigma = d[1] * d[1] + d[2] * d[2] + d[3] * d[3] - d[0] * d[0];
        remainder_symmetric(sigma, &self.0).expect("validated parameters")
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct StressConfig {
    pub m: f64,
    pub xi: f64,
    /// Initial split; halved until the Richardson defect is below `tol`.
    pub h: f64,
    pub tol: f64,
    pub max_halvings: usize,
}

impl Default for StressConfig {
    fn default() -> Self {
        StressConfig { m: 1.0, xi: 0.0, h: 0.05, tol: 1e-8, max_halvings: 4 }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct StressTensor {
    pub t: Tensor2,
    /// `D^can` alone, without the `-g_ab P_x / 3` term.
    pub canonical: Tensor2,
    /// `(P_x w)(x, x)`.
    pub p_x_w: f64,
    pub w: f64,
    pub split: f64,
    pub richardson_defect: f64,
}

const D1: [f64; 5] = [1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0];
const D2: [f64; 5] = [-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0];

fn shift(x: &Event, a: usize, s: f64) -> Event {
    let mut y = *x;
    y[a] += s;
    y
}

/// Mixed derivatives `d_a d_b' w` and `d_a d_b w` at `(x, x)` with fourth-order
/// stencils, and the largest sampled `|w|`.
fn second_derivatives(k: &dyn SplitKernel, x: &Event, h: f64) -> (Tensor2, Tensor2, f64) {
    let mut peak = 0.0f64;
    let mut eval = |p: &Event, q: &Event| {
        let v = k.eval(p, q);
        peak = peak.max(v.abs());
        v
    };
    let mut mixed = [[0.0; 4]; 4];
    let mut same = [[0.0; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let mut m = 0.0;
            for (i, ci) in D1.iter().enumerate() {
                for (j, cj) in D1.iter().enumerate() {
                    if *ci == 0.0 || *cj == 0.0 {
                        continue;
                    }
                    let xi = shift(x, a, (i as f64 - 2.0) * h);
                    let yj = shift(x, b, (j as f64 - 2.0) * h);
                    m += ci * cj * eval(&xi, &yj);
                }
            }
            mixed[a][b] = m / (h * h);
            let mut s = 0.0;
            if a == b {
                for (i, ci) in D2.iter().enumerate() {
                    s += ci * eval(&shift(x, a, (i as f64 - 2.0) * h), x);
                }
            } else {
                for (i, ci) in D1.iter().enumerate() {
                    for (j, cj) in D1.iter().enumerate() {
                        if *ci == 0.0 || *cj == 0.0 {
                            continue;
                        }
                        let p = shift(&shift(x, a, (i as f64 - 2.0) * h), b, (j as f64 - 2.0) * h);
                        s += ci * cj * eval(&p, x);
                    }
                }
            }
            same[a][b] = s / (h * h);
        }
    }
    (mixed, same, peak)
}

fn combine(coarse: &Tensor2, fine: &Tensor2) -> (Tensor2, f64) {
    let mut out = [[0.0; 4]; 4];
    let mut defect = 0.0f64;
    for a in 0..4 {
        for b in 0..4 {
            out[a][b] = (16.0 * fine[a][b] - coarse[a][b]) / 15.0;
            defect = defect.max((fine[a][b] - coarse[a][b]).abs());
        }
    }
    (out, defect)
}

pub fn stress_energy(k: &dyn SplitKernel, x: &Event, cfg: &StressConfig) -> Result<StressTensor, WickError> {
    let mut h = cfg.h;
    let w = k.eval(x, x);
    let mut last_defect = f64::INFINITY;
    for _ in 0..=cfg.max_halvings {
        let (mc, sc, peak) = second_derivatives(k, x, h);
        let (mf, sf, _) = second_derivatives(k, x, h / 2.0);
        let (mixed, d1) = combine(&mc, &mf);
        let (same, d2) = combine(&sc, &sf);
        let defect = d1.max(d2);
        let scale = mixed.iter().chain(same.iter()).flatten().fold(cfg.m * cfg.m * w.abs(), |a, v| a.max(v.abs()));
        // differences of O(1) kernel values lose ~1e3 ulps to cancellation
        let rounding = 1e3 * f64::EPSILON * peak / (h * h);
        if defect <= cfg.tol * scale + rounding {
            return Ok(assemble(&mixed, &same, w, cfg, h, defect));
        }
        last_defect = defect;
        h /= 2.0;
    }
    Err(WickError::Resolution { defect: last_defect, tol: cfg.tol })
}

fn assemble(mixed: &Tensor2, same: &Tensor2, w: f64, cfg: &StressConfig, h: f64, defect: f64) -> StressTensor {
    let xi = cfg.xi;
    let m2 = cfg.m * cfg.m;
    let box_x: f64 = (0..4).map(|c| METRIC[c] * same[c][c]).sum();
    let cross: f64 = (0..4).map(|c| METRIC[c] * mixed[c][c]).sum();
    let p_x_w = box_x + m2 * w;
    let mut canonical = [[0.0; 4]; 4];
    let mut t = [[0.0; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let g = if a == b { METRIC[a] } else { 0.0 };
            let sym_mixed = 0.5 * (mixed[a][b] + mixed[b][a]);
            let sym_same = 0.5 * (same[a][b] + same[b][a]);
            canonical[a][b] = (1.0 - 2.0 * xi) * sym_mixed - 2.0 * xi * sym_same
                + g * (2.0 * xi * box_x + (2.0 * xi - 0.5) * cross + 0.5 * m2 * w);
            t[a][b] = canonical[a][b] - g * p_x_w / 3.0;
        }
    }
    StressTensor { t, canonical, p_x_w, w, split: h, richardson_defect: defect }
}

/// `g^{ab} T_ab`.
pub fn trace(t: &Tensor2) -> f64 {
    (0..4).map(|a| METRIC[a] * t[a][a]).sum()
}

/// `d^a T_ab(x)` by fourth-order central differences of [`stress_energy`] with
/// spacing `step`.
pub fn divergence(k: &dyn SplitKernel, x: &Event, cfg: &StressConfig, step: f64) -> Result<[f64; 4], WickError> {
    let mut div = [0.0; 4];
    for a in 0..4 {
        let mut deriv = [0.0; 4];
        for (i, c) in D1.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let t = stress_energy(k, &shift(x, a, (i as f64 - 2.0) * step), cfg)?.t;
            for b in 0..4 {
                deriv[b] += c * t[a][b] / step;
            }
        }
        for b in 0..4 {
            div[b] += METRIC[a] * deriv[b];
        }
    }
    Ok(div)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_kernel() {
        let s = stress_energy(&ConstantKernel(0.0), &[0.0; 4], &StressConfig::default()).unwrap();
        assert!(s.t.iter().flatten().all(|v| *v == 0.0));
    }
}
