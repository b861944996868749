use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::PhaseSpaceError;
use crate::forms::validate_mu_tau;

pub const J_SQUARE_TOL: f64 = 1e-10;
pub const SUP_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct PurityReport {
    pub pure: bool,
    /// `|J^2 + I|` in the `mu` operator norm.
    pub j_square_defect: f64,
    /// `max |c_i - 1|` over the generalized eigenvalues of the sup problem.
    pub sup_residual: f64,
    pub sup_eigenvalues: Vec<f64>,
}

/// Generalized eigenvalues `c` of `(tau mu^{-1} tau^T / 4) v = c mu v`.
///
/// `c_max` is `sup_psi sup_phi |tau(psi,phi)|^2 / (4 mu(phi,phi) mu(psi,psi))`, and
/// the state is pure iff `mu(psi,psi)` equals the inner sup for every `psi`,
/// i.e. iff all `c` equal 1.
pub fn sup_eigenvalues(mu: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<Vec<f64>, PhaseSpaceError> {
    let mu_inv = mu.clone().try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let a = tau * mu_inv * tau.transpose() * 0.25;
    let l = crate::forms::cholesky(mu)?;
    let l_inv = l.try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let mut b = &l_inv * a * l_inv.transpose();
    b = (&b + b.transpose()) * 0.5;
    let mut ev: Vec<f64> = SymmetricEigen::new(b).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

pub fn purity(mu: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<PurityReport, PhaseSpaceError> {
    let op = validate_mu_tau(mu, tau)?;
    let d = mu.nrows();
    let l = &op.cholesky;
    let l_inv = l.clone().try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let defect_op = &op.j * &op.j + DMatrix::identity(d, d);
    let j_square_defect = if d == 0 { 0.0 } else { (l.transpose() * defect_op * l_inv.transpose()).singular_values().max() };
    let sup = sup_eigenvalues(mu, tau)?;
    let sup_residual = sup.iter().fold(0.0_f64, |a, c| a.max((c - 1.0).abs()));
    let by_j = j_square_defect <= J_SQUARE_TOL;
    let by_sup = sup_residual <= SUP_RESIDUAL_TOL;
    if by_j != by_sup {
        return Err(PhaseSpaceError::InternalInconsistency(format!(
            "purity verdicts disagree: |J^2+I| = {j_square_defect:e}, sup residual = {sup_residual:e}"
        )));
    }
    Ok(PurityReport { pure: by_j, j_square_defect, sup_residual, sup_eigenvalues: sup })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::standard_symplectic;

    #[test]
    fn verdicts() {
        let tau = standard_symplectic(2);
        assert!(purity(&(DMatrix::identity(4, 4) * 0.5), &tau).unwrap().pure);
        let r = purity(&DMatrix::identity(4, 4), &tau).unwrap();
        assert!(!r.pure);
        assert!((r.j_square_defect - 0.75).abs() < 1e-14);
        assert!(!purity(&DMatrix::identity(2, 2), &DMatrix::zeros(2, 2)).unwrap().pure);
    }
}
