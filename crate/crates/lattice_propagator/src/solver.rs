use crate::config::{Boundary, LatticeConfig};
use crate::error::LatticeError;
use crate::field::LatticeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Retarded,
    Advanced,
}

/// `(L u)_j - m^2 u_j` with the boundary rule of `cfg`.
pub(crate) fn spatial(cfg: &LatticeConfig, u: &[f64], out: &mut [f64]) {
    let n = cfg.n_x;
    let inv_a2 = 1.0 / (cfg.a * cfg.a);
    let m2 = cfg.m * cfg.m;
    let periodic = matches!(cfg.boundary, Boundary::Periodic);
    for j in 0..n {
        let left = if j > 0 { u[j - 1] } else if periodic { u[n - 1] } else { 0.0 };
        let right = if j + 1 < n { u[j + 1] } else if periodic { u[0] } else { 0.0 };
        out[j] = (left - 2.0 * u[j] + right) * inv_a2 - m2 * u[j];
    }
}

/// Discrete `P u = D_tt u - D_xx u + m^2 u` on levels `1..t_steps`; zero on the
/// two end levels where the stencil is incomplete.
pub fn apply_kg(cfg: &LatticeConfig, u: &LatticeField) -> Result<LatticeField, LatticeError> {
    cfg.validate()?;
    u.check_shape(cfg)?;
    let mut out = LatticeField::zeros(cfg);
    let inv_dt2 = 1.0 / (cfg.dt * cfg.dt);
    let mut lu = vec![0.0; cfg.n_x];
    for s in 1..cfg.t_steps {
        spatial(cfg, u.level(s), &mut lu);
        let (prev, cur, next) = (u.level(s - 1), u.level(s), u.level(s + 1));
        let row: Vec<f64> = (0..cfg.n_x).map(|j| (next[j] - 2.0 * cur[j] + prev[j]) * inv_dt2 - lu[j]).collect();
        out.level_mut(s).copy_from_slice(&row);
    }
    Ok(out)
}

/// Rejects sources whose numerical domain of influence could meet a boundary
/// of the grid.
pub fn check_support(cfg: &LatticeConfig, f: &LatticeField) -> Result<(), LatticeError> {
    cfg.validate()?;
    f.check_shape(cfg)?;
    let Some(sup) = f.support() else { return Ok(()) };
    if sup.s_min < 2 || sup.s_max + 2 > cfg.t_steps {
        return Err(LatticeError::CausalContamination(format!(
            "source occupies time levels {}..={} but must stay within 2..={}",
            sup.s_min,
            sup.s_max,
            cfg.t_steps - 2
        )));
    }
    if let Boundary::AbsorbingPad { pad } = cfg.boundary {
        if sup.j_min < pad || sup.j_max + pad >= cfg.n_x {
            return Err(LatticeError::CausalContamination(format!(
                "source occupies sites {}..={} inside the {pad}-cell pad",
                sup.j_min, sup.j_max
            )));
        }
    }
    Ok(())
}

/// Leapfrog marching of `P u = f` with zero data in the far past (retarded)
/// or the far future (advanced).
pub fn fundamental(cfg: &LatticeConfig, f: &LatticeField, which: Which) -> Result<LatticeField, LatticeError> {
    check_support(cfg, f)?;
    let mut u = LatticeField::zeros(cfg);
    let dt2 = cfg.dt * cfg.dt;
    let mut lu = vec![0.0; cfg.n_x];
    let t = cfg.t_steps;
    match which {
        Which::Retarded => {
            for s in 1..t {
                spatial(cfg, u.level(s), &mut lu);
                let row: Vec<f64> = (0..cfg.n_x)
                    .map(|j| 2.0 * u.get(s, j) - u.get(s - 1, j) + dt2 * (lu[j] + f.get(s, j)))
                    .collect();
                u.level_mut(s + 1).copy_from_slice(&row);
            }
        }
        Which::Advanced => {
            for s in (1..t).rev() {
                spatial(cfg, u.level(s), &mut lu);
                let row: Vec<f64> = (0..cfg.n_x)
                    .map(|j| 2.0 * u.get(s, j) - u.get(s + 1, j) + dt2 * (lu[j] + f.get(s, j)))
                    .collect();
                u.level_mut(s - 1).copy_from_slice(&row);
            }
        }
    }
    Ok(u)
}

/// `E f = advanced(f) - retarded(f)`, a homogeneous solution on levels `1..t_steps`.
pub fn causal_e(cfg: &LatticeConfig, f: &LatticeField) -> Result<LatticeField, LatticeError> {
    let adv = fundamental(cfg, f, Which::Advanced)?;
    let ret = fundamental(cfg, f, Which::Retarded)?;
    Ok(&adv - &ret)
}

/// Homogeneous solution from two consecutive levels `start`, `start + 1`,
/// marched both ways across the whole grid.
pub fn evolve_homogeneous(
    cfg: &LatticeConfig,
    start: usize,
    first: &[f64],
    second: &[f64],
) -> Result<LatticeField, LatticeError> {
    cfg.validate()?;
    if start + 1 > cfg.t_steps {
        return Err(LatticeError::InvalidSlice { slice: start, reason: "needs a following level".into() });
    }
    if first.len() != cfg.n_x || second.len() != cfg.n_x {
        return Err(LatticeError::Shape { got_t: 2, got_x: first.len(), want_t: 2, want_x: cfg.n_x });
    }
    let mut u = LatticeField::zeros(cfg);
    u.level_mut(start).copy_from_slice(first);
    u.level_mut(start + 1).copy_from_slice(second);
    let dt2 = cfg.dt * cfg.dt;
    let mut lu = vec![0.0; cfg.n_x];
    for s in start + 1..cfg.t_steps {
        spatial(cfg, u.level(s), &mut lu);
        let row: Vec<f64> = (0..cfg.n_x).map(|j| 2.0 * u.get(s, j) - u.get(s - 1, j) + dt2 * lu[j]).collect();
        u.level_mut(s + 1).copy_from_slice(&row);
    }
    for s in (1..=start).rev() {
        spatial(cfg, u.level(s), &mut lu);
        let row: Vec<f64> = (0..cfg.n_x).map(|j| 2.0 * u.get(s, j) - u.get(s + 1, j) + dt2 * lu[j]).collect();
        u.level_mut(s - 1).copy_from_slice(&row);
    }
    Ok(u)
}
