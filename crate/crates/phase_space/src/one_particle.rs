use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::PhaseSpaceError;
use crate::forms::validate_mu_tau;

/// Planes of the reduced `J` with `|lambda|` within this of 1 are treated as pure.
const PURE_PLANE_TOL: f64 = 1e-12;
/// Below this `lambda` a direction is treated as lying in the kernel of `tau`.
const KERNEL_TOL: f64 = 1e-12;

/// Real-linear `K: R^{2N} -> C^M` with `<Kx|Ky> = mu(x,y) + (i/2) tau(x,y)`.
///
/// Stored as a complex `M x 2N` matrix; `K x` is the matrix applied to the
/// real vector `x`. The inner product is antilinear in the first slot.
#[derive(Clone, Debug)]
pub struct OneParticleStructure {
    pub k: DMatrix<Complex64>,
    pub pure_planes: usize,
    pub mixed_planes: usize,
    pub kernel_dims: usize,
}

impl OneParticleStructure {
    pub fn hilbert_dim(&self) -> usize {
        self.k.nrows()
    }

    pub fn phase_dim(&self) -> usize {
        self.k.ncols()
    }

    pub fn apply(&self, x: &DVector<f64>) -> DVector<Complex64> {
        &self.k * x.map(|v| Complex64::new(v, 0.0))
    }

    /// `K^dagger K`, which should equal `mu + (i/2) tau`.
    pub fn gram(&self) -> DMatrix<Complex64> {
        self.k.adjoint() * &self.k
    }

    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> Complex64 {
        self.apply(x).dotc(&self.apply(y))
    }

    /// Complex rank of the image; equals `M` when `K V + i K V` spans `C^M`.
    pub fn complex_rank(&self) -> usize {
        self.k.clone().svd(false, false).rank(1e-10)
    }

    /// Largest entry of `K^dagger K - mu - (i/2) tau`.
    pub fn reconstruction_residual(&self, mu: &DMatrix<f64>, tau: &DMatrix<f64>) -> f64 {
        let g = self.gram();
        let mut worst = 0.0_f64;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                let want = Complex64::new(mu[(i, j)], 0.5 * tau[(i, j)]);
                worst = worst.max((g[(i, j)] - want).norm());
            }
        }
        worst
    }
}

pub fn one_particle(mu: &DMatrix<f64>, tau: &DMatrix<f64>) -> Result<OneParticleStructure, PhaseSpaceError> {
    let op = validate_mu_tau(mu, tau)?;
    let jt = &op.reduced;
    let d = jt.nrows();
    // -J^2 is symmetric PSD; its eigenspaces are J-invariant
    let eig = SymmetricEigen::new(-(jt * jt));
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

    let mut used: Vec<DVector<f64>> = Vec::new();
    // (reduced-frame direction, image in C^M) before the final M is known
    let mut columns: Vec<(DVector<f64>, Vec<(usize, Complex64)>)> = Vec::new();
    let mut m = 0usize;
    let (mut pure, mut mixed, mut kernel) = (0, 0, 0);
    for &idx in &order {
        let mut e = eig.eigenvectors.column(idx).into_owned();
        for _ in 0..2 {
            for u in &used {
                let c = u.dot(&e);
                e -= u * c;
            }
        }
        let nrm = e.norm();
        if nrm < 0.5 {
            continue;
        }
        e /= nrm;
        let je = jt * &e;
        let lambda = je.norm();
        if lambda <= KERNEL_TOL {
            columns.push((e.clone(), vec![(m, Complex64::new(1.0, 0.0))]));
            used.push(e);
            m += 1;
            kernel += 1;
            continue;
        }
        let mut f = je / lambda;
        for u in &used {
            let c = u.dot(&f);
            f -= u * c;
        }
        let c = e.dot(&f);
        f -= &e * c;
        f /= f.norm();
        // J e = lambda f and J f = -lambda e, so <Ke|Kf> must be -i lambda
        if (lambda - 1.0).abs() <= PURE_PLANE_TOL {
            columns.push((e.clone(), vec![(m, Complex64::new(1.0, 0.0))]));
            columns.push((f.clone(), vec![(m, Complex64::new(0.0, -1.0))]));
            m += 1;
            pure += 1;
        } else {
            let lam = lambda.min(1.0);
            let a = ((1.0 + lam) / 2.0).sqrt();
            let b = ((1.0 - lam) / 2.0).sqrt();
            columns.push((e.clone(), vec![(m, Complex64::new(a, 0.0)), (m + 1, Complex64::new(b, 0.0))]));
            columns.push((f.clone(), vec![(m, Complex64::new(0.0, -a)), (m + 1, Complex64::new(0.0, b))]));
            m += 2;
            mixed += 1;
        }
        used.push(e);
        used.push(f);
    }
    if used.len() != d {
        return Err(PhaseSpaceError::InternalInconsistency(format!(
            "plane decomposition covered {} of {d} directions",
            used.len()
        )));
    }
    // K~ = sum_v (K v) v^T in the reduced frame, then K = K~ L^T
    let mut kt = DMatrix::<Complex64>::zeros(m, d);
    for (v, img) in &columns {
        for &(row, z) in img {
            for c in 0..d {
                kt[(row, c)] += z * v[c];
            }
        }
    }
    let lt = op.cholesky.transpose().map(|x| Complex64::new(x, 0.0));
    Ok(OneParticleStructure { k: kt * lt, pure_planes: pure, mixed_planes: mixed, kernel_dims: kernel })
}

/// Unitary `V` with `V K1 = K2`, when both structures have full complex rank.
pub fn relating_unitary(
    k1: &OneParticleStructure,
    k2: &OneParticleStructure,
) -> Result<DMatrix<Complex64>, PhaseSpaceError> {
    if k1.phase_dim() != k2.phase_dim() || k1.hilbert_dim() != k2.hilbert_dim() {
        return Err(PhaseSpaceError::Shape("one-particle structures of different shape".into()));
    }
    let pinv = k1
        .k
        .clone()
        .pseudo_inverse(1e-12)
        .map_err(|e| PhaseSpaceError::InternalInconsistency(e.to_string()))?;
    let v = &k2.k * pinv;
    let worst = |m: DMatrix<Complex64>| m.iter().fold(0.0_f64, |a, z| a.max(z.norm()));
    let defect = worst(v.adjoint() * &v - DMatrix::identity(v.nrows(), v.ncols()));
    let fit = worst(&v * &k1.k - &k2.k);
    if defect > 1e-9 || fit > 1e-9 {
        return Err(PhaseSpaceError::InternalInconsistency(format!(
            "no unitary relates the structures (unitarity {defect:e}, fit {fit:e})"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::standard_symplectic;

    #[test]
    fn pure_single_mode() {
        let mu = DMatrix::identity(2, 2) * 0.5;
        let tau = standard_symplectic(1);
        let s = one_particle(&mu, &tau).unwrap();
        assert_eq!(s.hilbert_dim(), 1);
        let e1 = DVector::from_vec(vec![1.0, 0.0]);
        let e2 = DVector::from_vec(vec![0.0, 1.0]);
        let z = s.inner(&e1, &e2);
        assert!((z - Complex64::new(0.0, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn mixed_and_degenerate() {
        let tau = standard_symplectic(1);
        let s = one_particle(&DMatrix::identity(2, 2), &tau).unwrap();
        assert_eq!((s.mixed_planes, s.hilbert_dim()), (1, 2));
        assert!(s.reconstruction_residual(&DMatrix::identity(2, 2), &tau) < 1e-15);
        assert_eq!(s.complex_rank(), 2);
        let s = one_particle(&DMatrix::identity(3, 3), &DMatrix::zeros(3, 3)).unwrap();
        assert_eq!(s.kernel_dims, 3);
    }
}
