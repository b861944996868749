use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::PhaseSpaceError;
use crate::forms::{check_square, check_symmetric, standard_symplectic};

/// Relative threshold below which an energy eigenvalue counts as a zero mode.
pub const GAP_TOL: f64 = 1e-12;

/// Hamiltonian generator `A = -tau^{-1} h` of `x' = A x` for `H(x) = x^T h x / 2`.
pub fn hamiltonian_generator(h: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<DMatrix<f64>, PhaseSpaceError> {
    let tau_inv = tau
        .clone()
        .try_inverse()
        .ok_or_else(|| PhaseSpaceError::InvalidInput("tau must be non-degenerate for a Hamiltonian flow".into()))?;
    Ok(-(tau_inv * h))
}

/// Symplectic time-evolution map `exp(t A)`.
pub fn evolution(h: &DMatrix<f64>, tau: &DMatrix<f64>, t: f64) -> Result<DMatrix<f64>, PhaseSpaceError> {
    Ok((hamiltonian_generator(h, tau)? * t).exp())
}

fn checked_energy(h: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<DMatrix<f64>, PhaseSpaceError> {
    check_symmetric(h)?;
    check_square("tau", tau)?;
    if h.nrows() != tau.nrows() || h.nrows() % 2 == 1 {
        return Err(PhaseSpaceError::Shape("energy form and tau must share an even dimension".into()));
    }
    let eig = SymmetricEigen::new(h.clone());
    let top = eig.eigenvalues.iter().fold(0.0_f64, |a, x| a.max(x.abs()));
    let low = eig.eigenvalues.min();
    if low < -GAP_TOL * top {
        return Err(PhaseSpaceError::InvalidInput(format!("energy form has negative eigenvalue {low:e}")));
    }
    if low <= GAP_TOL * top {
        return Err(PhaseSpaceError::SpectrumNotGapped { min_frequency: low.max(0.0).sqrt() });
    }
    crate::forms::cholesky(h)
}

/// Normal-mode frequencies, ascending, each listed once per mode.
pub fn mode_frequencies(h: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<Vec<f64>, PhaseSpaceError> {
    let l = checked_energy(h, tau)?;
    let tau_inv = tau
        .clone()
        .try_inverse()
        .ok_or_else(|| PhaseSpaceError::InvalidInput("tau must be non-degenerate".into()))?;
    let c = l.transpose() * tau_inv * &l;
    let mut w: Vec<f64> = c.singular_values().iter().copied().collect();
    w.sort_by(f64::total_cmp);
    // singular values of the antisymmetric C come in equal pairs
    Ok(w.chunks(2).map(|p| p[0]).collect())
}

/// Ground-state covariance of the quadratic Hamiltonian `h`.
///
/// With `h = L L^T` and `C = L^T tau^{-1} L`, `mu = L (C^T C)^{-1/2} L^T / 2`.
/// This keeps positive frequencies only: for one mode with
/// `h = diag(w^2, 1)` it gives `mu = diag(w/2, 1/(2w))`.
pub fn ground_state_mu(h: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<DMatrix<f64>, PhaseSpaceError> {
    let l = checked_energy(h, tau)?;
    let tau_inv = tau
        .clone()
        .try_inverse()
        .ok_or_else(|| PhaseSpaceError::InvalidInput("tau must be non-degenerate".into()))?;
    let c = l.transpose() * tau_inv * &l;
    let ctc = c.transpose() * &c;
    let eig = SymmetricEigen::new((&ctc + ctc.transpose()) * 0.5);
    let inv_sqrt = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| 1.0 / x.sqrt()));
    let root = &eig.eigenvectors * inv_sqrt * eig.eigenvectors.transpose();
    let mu = &l * root * l.transpose() * 0.5;
    Ok((&mu + mu.transpose()) * 0.5)
}

/// Periodic 1D lattice Klein-Gordon chain in `(q, p)` coordinates:
/// `h = diag(m^2 + Laplacian / a^2, I)` with the standard `tau`.
pub fn periodic_lattice_energy(sites: usize, spacing: f64, mass: f64) -> (DMatrix<f64>, DMatrix<f64>) {
    let mut h = DMatrix::zeros(2 * sites, 2 * sites);
    let inv_a2 = 1.0 / (spacing * spacing);
    for i in 0..sites {
        h[(i, i)] += mass * mass;
        if sites > 1 {
            h[(i, i)] += 2.0 * inv_a2;
            h[(i, (i + 1) % sites)] -= inv_a2;
            h[(i, (i + sites - 1) % sites)] -= inv_a2;
        }
        h[(sites + i, sites + i)] = 1.0;
    }
    (h, standard_symplectic(sites))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_mode() {
        let w = 1.7;
        let h = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![w * w, 1.0]));
        let mu = ground_state_mu(&h, &standard_symplectic(1)).unwrap();
        assert!((mu[(0, 0)] - w / 2.0).abs() < 1e-14);
        assert!((mu[(1, 1)] - 1.0 / (2.0 * w)).abs() < 1e-14);
        assert!(mu[(0, 1)].abs() < 1e-14);
        assert!((mode_frequencies(&h, &standard_symplectic(1)).unwrap()[0] - w).abs() < 1e-13);
    }

    #[test]
    fn massless_ring_is_not_gapped() {
        let (h, tau) = periodic_lattice_energy(6, 0.5, 0.0);
        assert!(matches!(ground_state_mu(&h, &tau), Err(PhaseSpaceError::SpectrumNotGapped { .. })));
    }

    #[test]
    fn lattice_dispersion() {
        let (n, a, m) = (8, 0.5, 0.7);
        let (h, tau) = periodic_lattice_energy(n, a, m);
        let got = mode_frequencies(&h, &tau).unwrap();
        let mut want: Vec<f64> = (0..n)
            .map(|j| {
                let k = 2.0 * std::f64::consts::PI * j as f64 / (n as f64 * a);
                (m * m + (2.0 / a * (k * a / 2.0).sin()).powi(2)).sqrt()
            })
            .collect();
        want.sort_by(f64::total_cmp);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-12, "{g} vs {w}");
        }
    }
}
