use serde::{Deserialize, Serialize};

use crate::error::LatticeError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Boundary {
    Periodic,
    /// Zero Dirichlet data beyond a buffer of `pad` cells on each side. With
    /// `pad >= t_steps` nothing sourced inside the buffer can reach the edge.
    AbsorbingPad { pad: usize },
}

/// Space-time grid `t_s = s dt` (`s = 0..=t_steps`), `x_j = x_min + j a`
/// (`j = 0..n_x`), natural units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub n_x: usize,
    pub a: f64,
    pub dt: f64,
    pub t_steps: usize,
    pub m: f64,
    pub boundary: Boundary,
    #[serde(default)]
    pub x_min: f64,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig {
            n_x: 401,
            a: 0.02,
            dt: 0.01,
            t_steps: 150,
            m: 1.0,
            boundary: Boundary::AbsorbingPad { pad: 150 },
            x_min: -4.0,
        }
    }
}

impl LatticeConfig {
    pub fn n_t(&self) -> usize {
        self.t_steps + 1
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.a
    }

    pub fn t(&self, s: usize) -> f64 {
        s as f64 * self.dt
    }

    pub fn cell_volume(&self) -> f64 {
        self.a * self.dt
    }

    /// `dt^2 (4/a^2 + m^2)`; leapfrog needs this at most 4.
    pub fn stability_number(&self) -> f64 {
        self.dt * self.dt * (4.0 / (self.a * self.a) + self.m * self.m)
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        let bad = |key, reason: &str| Err(LatticeError::InvalidParameter { key, reason: reason.into() });
        if !(self.a.is_finite() && self.a > 0.0) {
            return bad("a", "spacing must be positive");
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return bad("dt", "time step must be positive");
        }
        if !(self.m.is_finite() && self.m >= 0.0) {
            return bad("m", "mass must be non-negative");
        }
        if !self.x_min.is_finite() {
            return bad("x_min", "must be finite");
        }
        if self.n_x < 3 {
            return bad("n_x", "need at least 3 sites");
        }
        if self.t_steps < 4 {
            return bad("t_steps", "need at least 4 steps");
        }
        if self.dt > self.a {
            return Err(LatticeError::Cfl { dt: self.dt, a: self.a });
        }
        let value = self.stability_number();
        if value > 4.0 {
            return Err(LatticeError::MassUnstable { value });
        }
        if let Boundary::AbsorbingPad { pad } = self.boundary {
            if pad < self.t_steps {
                return Err(LatticeError::PadTooNarrow { pad, needed: self.t_steps });
            }
            if 2 * pad >= self.n_x {
                return bad("boundary.pad", "pads leave no interior");
            }
        }
        Ok(())
    }

    /// Same physical box and duration with `a` and `dt` divided by `factor`.
    pub fn refined(&self, factor: usize) -> LatticeConfig {
        let boundary = match self.boundary {
            Boundary::Periodic => Boundary::Periodic,
            Boundary::AbsorbingPad { pad } => Boundary::AbsorbingPad { pad: pad * factor },
        };
        let n_x = match self.boundary {
            Boundary::Periodic => self.n_x * factor,
            Boundary::AbsorbingPad { .. } => (self.n_x - 1) * factor + 1,
        };
        LatticeConfig {
            n_x,
            a: self.a / factor as f64,
            dt: self.dt / factor as f64,
            t_steps: self.t_steps * factor,
            boundary,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules() {
        assert!(LatticeConfig::default().validate().is_ok());
        let c = LatticeConfig { dt: 0.03, ..Default::default() };
        assert!(matches!(c.validate(), Err(LatticeError::Cfl { .. })));
        let c = LatticeConfig { dt: 0.02, m: 1.0, ..Default::default() };
        assert!(matches!(c.validate(), Err(LatticeError::MassUnstable { .. })));
        let c = LatticeConfig { boundary: Boundary::AbsorbingPad { pad: 10 }, ..Default::default() };
        assert!(matches!(c.validate(), Err(LatticeError::PadTooNarrow { .. })));
        let r = LatticeConfig::default().refined(2);
        assert!((r.x(r.n_x - 1) - LatticeConfig::default().x(400)).abs() < 1e-12);
    }
}
