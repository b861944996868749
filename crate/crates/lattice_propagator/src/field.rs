use std::ops::{Add, Mul, Sub};

use crate::config::LatticeConfig;
use crate::error::LatticeError;

/// Real values on the `(t, x)` grid, row-major in time: `values[s * n_x + j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeField {
    pub n_t: usize,
    pub n_x: usize,
    pub values: Vec<f64>,
}

/// Inclusive bounding box of the non-zero entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Support {
    pub s_min: usize,
    pub s_max: usize,
    pub j_min: usize,
    pub j_max: usize,
}

impl LatticeField {
    pub fn zeros(cfg: &LatticeConfig) -> Self {
        LatticeField { n_t: cfg.n_t(), n_x: cfg.n_x, values: vec![0.0; cfg.n_t() * cfg.n_x] }
    }

    /// Samples `f(t, x)` at every grid point.
    pub fn sample<F: Fn(f64, f64) -> f64>(cfg: &LatticeConfig, f: F) -> Self {
        let mut out = Self::zeros(cfg);
        for s in 0..cfg.n_t() {
            for j in 0..cfg.n_x {
                out.values[s * cfg.n_x + j] = f(cfg.t(s), cfg.x(j));
            }
        }
        out
    }

    /// A single cell of weight `1 / (a dt)`, the lattice stand-in for a delta.
    pub fn point_source(cfg: &LatticeConfig, s: usize, j: usize) -> Self {
        let mut out = Self::zeros(cfg);
        out.set(s, j, 1.0 / cfg.cell_volume());
        out
    }

    pub fn get(&self, s: usize, j: usize) -> f64 {
        self.values[s * self.n_x + j]
    }

    pub fn set(&mut self, s: usize, j: usize, v: f64) {
        self.values[s * self.n_x + j] = v;
    }

    pub fn level(&self, s: usize) -> &[f64] {
        &self.values[s * self.n_x..(s + 1) * self.n_x]
    }

    pub fn level_mut(&mut self, s: usize) -> &mut [f64] {
        &mut self.values[s * self.n_x..(s + 1) * self.n_x]
    }

    pub fn support(&self) -> Option<Support> {
        let mut sup: Option<Support> = None;
        for s in 0..self.n_t {
            for j in 0..self.n_x {
                if self.get(s, j) == 0.0 {
                    continue;
                }
                sup = Some(match sup {
                    None => Support { s_min: s, s_max: s, j_min: j, j_max: j },
                    Some(b) => Support {
                        s_min: b.s_min.min(s),
                        s_max: b.s_max.max(s),
                        j_min: b.j_min.min(j),
                        j_max: b.j_max.max(j),
                    },
                });
            }
        }
        sup
    }

    /// Zeroes entries with `|v| <= cut`, which keeps sampled bumps compact.
    pub fn chop(mut self, cut: f64) -> Self {
        for v in &mut self.values {
            if v.abs() <= cut {
                *v = 0.0;
            }
        }
        self
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |a, v| a.max(v.abs()))
    }

    /// `a dt sum f g`.
    pub fn inner(&self, other: &LatticeField, cfg: &LatticeConfig) -> f64 {
        cfg.cell_volume() * self.values.iter().zip(&other.values).map(|(x, y)| x * y).sum::<f64>()
    }

    pub fn norm(&self, cfg: &LatticeConfig) -> f64 {
        self.inner(self, cfg).sqrt()
    }

    pub fn check_shape(&self, cfg: &LatticeConfig) -> Result<(), LatticeError> {
        if self.n_t != cfg.n_t() || self.n_x != cfg.n_x || self.values.len() != self.n_t * self.n_x {
            return Err(LatticeError::Shape { got_t: self.n_t, got_x: self.n_x, want_t: cfg.n_t(), want_x: cfg.n_x });
        }
        Ok(())
    }

    /// Time reflection `s -> n_t - 1 - s`.
    pub fn reflected(&self) -> Self {
        let mut out = self.clone();
        for s in 0..self.n_t {
            out.level_mut(self.n_t - 1 - s).copy_from_slice(self.level(s));
        }
        out
    }

    /// `b"CCRF"`, `n_t` and `n_x` as little-endian u64, then the values as
    /// little-endian binary64, row-major.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(20 + 8 * self.values.len());
        out.extend_from_slice(b"CCRF");
        out.extend_from_slice(&(self.n_t as u64).to_le_bytes());
        out.extend_from_slice(&(self.n_x as u64).to_le_bytes());
        for v in &self.values {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(b: &[u8]) -> Result<Self, LatticeError> {
        if b.len() < 20 || &b[..4] != b"CCRF" {
            return Err(LatticeError::Decode("missing CCRF header".into()));
        }
        let word = |k: usize| u64::from_le_bytes(b[k..k + 8].try_into().expect("8 bytes")) as usize;
        let (n_t, n_x) = (word(4), word(12));
        let body = &b[20..];
        if n_t.checked_mul(n_x).and_then(|n| n.checked_mul(8)) != Some(body.len()) {
            return Err(LatticeError::Decode(format!("body length {} does not match {n_t}x{n_x}", body.len())));
        }
        let values = body.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes"))).collect();
        Ok(LatticeField { n_t, n_x, values })
    }
}

fn zip_with(a: &LatticeField, b: &LatticeField, op: impl Fn(f64, f64) -> f64) -> LatticeField {
    assert_eq!((a.n_t, a.n_x), (b.n_t, b.n_x), "field shapes differ");
    LatticeField { n_t: a.n_t, n_x: a.n_x, values: a.values.iter().zip(&b.values).map(|(x, y)| op(*x, *y)).collect() }
}

impl Add for &LatticeField {
    type Output = LatticeField;

    fn add(self, rhs: &LatticeField) -> LatticeField {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &LatticeField {
    type Output = LatticeField;

    fn sub(self, rhs: &LatticeField) -> LatticeField {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul<f64> for &LatticeField {
    type Output = LatticeField;

    fn mul(self, c: f64) -> LatticeField {
        LatticeField { n_t: self.n_t, n_x: self.n_x, values: self.values.iter().map(|x| x * c).collect() }
    }
}

/// Compactly supported `C^inf` bump `exp(1 - 1/(1 - r^2))` on the ellipse
/// `((t - t0)/wt)^2 + ((x - x0)/wx)^2 < 1`, with peak value `amp`.
pub fn bump(t0: f64, x0: f64, wt: f64, wx: f64, amp: f64) -> impl Fn(f64, f64) -> f64 {
    move |t, x| {
        let r2 = ((t - t0) / wt).powi(2) + ((x - x0) / wx).powi(2);
        if r2 >= 1.0 {
            0.0
        } else {
            amp * (1.0 - 1.0 / (1.0 - r2)).exp()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bytes_round_trip() {
        let cfg = LatticeConfig { n_x: 5, t_steps: 4, boundary: crate::Boundary::Periodic, ..Default::default() };
        let f = LatticeField::sample(&cfg, |t, x| t * 3.0 - x);
        assert_eq!(LatticeField::from_bytes(&f.to_bytes()).unwrap(), f);
        assert!(LatticeField::from_bytes(&f.to_bytes()[..30]).is_err());
    }

    #[test]
    fn bump_support() {
        let cfg = LatticeConfig::default();
        let f = LatticeField::sample(&cfg, bump(0.5, 0.0, 0.2, 0.2, 1.0));
        let s = f.support().unwrap();
        assert!(s.s_min >= 30 && s.s_max <= 70);
        assert!(cfg.x(s.j_min) > -0.21 && cfg.x(s.j_max) < 0.21);
    }
}
