use nalgebra::{Cholesky, DMatrix, Dyn};
use serde_json::Value;

use crate::error::PhaseSpaceError;

/// Relative slack on `|J|_mu <= 1`.
pub const COVARIANCE_TOL: f64 = 1e-10;

/// Real phase space of dimension `2N` with symplectic (or degenerate Poisson)
/// form `tau` and covariance `mu`.
///
/// Coordinates are `(q_1..q_N, p_1..p_N)` and `tau(x, y) = x^T tau y`, so the
/// standard form is `[[0, I], [-I, 0]]`. The oscillator ground state then has
/// `mu = I / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModePhaseSpace {
    pub mu: DMatrix<f64>,
    pub tau: DMatrix<f64>,
}

/// `J = mu^{-1} tau / 2`, i.e. `mu(x, J y) = tau(x, y) / 2`.
#[derive(Clone, Debug)]
pub struct OperatorJ {
    pub j: DMatrix<f64>,
    /// Operator norm of `J` in the `mu` inner product.
    pub norm: f64,
    /// `J` in `mu`-orthonormal coordinates, `L^{-1} (tau/2) L^{-T}` with `mu = L L^T`.
    /// Antisymmetric.
    pub reduced: DMatrix<f64>,
    pub cholesky: DMatrix<f64>,
}

pub fn standard_symplectic(n_modes: usize) -> DMatrix<f64> {
    let d = 2 * n_modes;
    let mut t = DMatrix::zeros(d, d);
    for k in 0..n_modes {
        t[(k, k + n_modes)] = 1.0;
        t[(k + n_modes, k)] = -1.0;
    }
    t
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |a, x| a.max(x.abs()))
}

pub(crate) fn cholesky(mu: &DMatrix<f64>) -> Result<DMatrix<f64>, PhaseSpaceError> {
    Cholesky::<f64, Dyn>::new(mu.clone()).map(|c| c.l()).ok_or(PhaseSpaceError::NotPositive)
}

pub(crate) fn check_square(name: &str, m: &DMatrix<f64>) -> Result<(), PhaseSpaceError> {
    if m.nrows() != m.ncols() {
        return Err(PhaseSpaceError::Shape(format!("{name} is {}x{}", m.nrows(), m.ncols())));
    }
    Ok(())
}

pub(crate) fn check_symmetric(mu: &DMatrix<f64>) -> Result<(), PhaseSpaceError> {
    check_square("mu", mu)?;
    let defect = max_abs(&(mu - mu.transpose()));
    if defect > 1e-12 * max_abs(mu).max(1.0) {
        return Err(PhaseSpaceError::NotSymmetric { defect });
    }
    Ok(())
}

pub fn validate_mu_tau(mu: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<OperatorJ, PhaseSpaceError> {
    check_symmetric(mu)?;
    check_square("tau", tau)?;
    if mu.nrows() != tau.nrows() {
        return Err(PhaseSpaceError::Shape(format!("mu is {}-dim, tau is {}-dim", mu.nrows(), tau.nrows())));
    }
    let defect = max_abs(&(tau + tau.transpose()));
    if defect > 1e-12 * max_abs(tau).max(1.0) {
        return Err(PhaseSpaceError::NotAntisymmetric { defect });
    }
    let l = cholesky(mu)?;
    let l_inv = l.clone().try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let mut reduced = &l_inv * (tau * 0.5) * l_inv.transpose();
    // exact antisymmetry in the reduced frame
    reduced = (&reduced - reduced.transpose()) * 0.5;
    let norm = if reduced.is_empty() { 0.0 } else { reduced.singular_values().max() };
    if norm > 1.0 + COVARIANCE_TOL {
        return Err(PhaseSpaceError::InvalidCovariance { norm });
    }
    let mu_inv = l_inv.transpose() * &l_inv;
    let j = mu_inv * tau * 0.5;
    Ok(OperatorJ { j, norm, reduced, cholesky: l })
}

impl ModePhaseSpace {
    pub fn new(mu: DMatrix<f64>, tau: DMatrix<f64>) -> Result<Self, PhaseSpaceError> {
        validate_mu_tau(&mu, &tau)?;
        Ok(ModePhaseSpace { mu, tau })
    }

    pub fn dim(&self) -> usize {
        self.mu.nrows()
    }
}

/// Square matrix from a JSON array of rows.
pub fn matrix_from_json(v: &Value) -> Result<DMatrix<f64>, PhaseSpaceError> {
    let bad = |s: String| PhaseSpaceError::InvalidInput(s);
    let rows = v.as_array().ok_or_else(|| bad("matrix must be an array of rows".into()))?;
    let n = rows.len();
    let mut m = DMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| bad(format!("row {i} must have {n} entries")))?;
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = x.as_f64().ok_or_else(|| bad(format!("entry [{i}][{j}] is not a number")))?;
        }
    }
    Ok(m)
}

pub fn matrix_to_json(m: &DMatrix<f64>) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::from(m.row(i).iter().copied().collect::<Vec<f64>>())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillator_ground_state() {
        let tau = standard_symplectic(1);
        let op = validate_mu_tau(&(DMatrix::identity(2, 2) * 0.5), &tau).unwrap();
        assert!((&op.j - &tau).abs().max() < 1e-15);
        assert!((op.norm - 1.0).abs() < 1e-14);
    }

    #[test]
    fn too_small_covariance() {
        let r = validate_mu_tau(&(DMatrix::identity(2, 2) * 0.4), &standard_symplectic(1));
        match r {
            Err(PhaseSpaceError::InvalidCovariance { norm }) => assert!((norm - 1.25).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_poisson() {
        let op = validate_mu_tau(&DMatrix::identity(4, 4), &DMatrix::zeros(4, 4)).unwrap();
        assert_eq!(op.j, DMatrix::zeros(4, 4));
    }

    #[test]
    fn json_round_trip() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 2.0]);
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }
}
