use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::PhaseSpaceError;
use crate::one_particle::OneParticleStructure;

pub const MAX_MODES: usize = 4;
pub const MAX_CUTOFF: usize = 6;

/// Symmetric Fock space truncated at total particle number `cutoff`, with
/// dense `a_j` matrices in the occupation basis.
#[derive(Clone, Debug)]
pub struct FockRepresentation {
    k: DMatrix<Complex64>,
    cutoff: usize,
    basis: Vec<Vec<usize>>,
    annihilators: Vec<DMatrix<Complex64>>,
}

fn occupation_basis(modes: usize, cutoff: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; modes];
    fn rec(j: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == cur.len() {
            out.push(cur.clone());
            return;
        }
        for n in 0..=left {
            cur[j] = n;
            rec(j + 1, left - n, cur, out);
        }
        cur[j] = 0;
    }
    rec(0, cutoff, &mut cur, &mut out);
    // sectors ascending, vacuum first
    out.sort_by_key(|v| (v.iter().sum::<usize>(), std::cmp::Reverse(v.clone())));
    out
}

pub fn fock_represent(ops: &OneParticleStructure, cutoff: usize) -> Result<FockRepresentation, PhaseSpaceError> {
    let m = ops.hilbert_dim();
    if m > MAX_MODES {
        return Err(PhaseSpaceError::FockGuard(format!("{m} one-particle modes exceed {MAX_MODES}")));
    }
    if cutoff > MAX_CUTOFF {
        return Err(PhaseSpaceError::FockGuard(format!("cutoff {cutoff} exceeds {MAX_CUTOFF}")));
    }
    let basis = occupation_basis(m, cutoff);
    let index: HashMap<Vec<usize>, usize> = basis.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    let dim = basis.len();
    let mut annihilators = Vec::with_capacity(m);
    for j in 0..m {
        let mut a = DMatrix::zeros(dim, dim);
        for (col, occ) in basis.iter().enumerate() {
            if occ[j] == 0 {
                continue;
            }
            let mut lower = occ.clone();
            lower[j] -= 1;
            a[(index[&lower], col)] = Complex64::new((occ[j] as f64).sqrt(), 0.0);
        }
        annihilators.push(a);
    }
    Ok(FockRepresentation { k: ops.k.clone(), cutoff, basis, annihilators })
}

impl FockRepresentation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn modes(&self) -> usize {
        self.annihilators.len()
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn annihilation(&self, j: usize) -> &DMatrix<Complex64> {
        &self.annihilators[j]
    }

    pub fn creation(&self, j: usize) -> DMatrix<Complex64> {
        self.annihilators[j].adjoint()
    }

    /// `a(psi) = sum_j conj(psi_j) a_j`.
    pub fn annihilate(&self, psi: &DVector<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.dim(), self.dim());
        for (j, a) in self.annihilators.iter().enumerate() {
            out += a * psi[j].conj();
        }
        out
    }

    /// `phi(x) = a(Kx) + a^dagger(Kx)`.
    pub fn field(&self, x: &DVector<f64>) -> DMatrix<Complex64> {
        let psi = &self.k * x.map(|v| Complex64::new(v, 0.0));
        let a = self.annihilate(&psi);
        let ad = a.adjoint();
        a + ad
    }

    pub fn vacuum(&self) -> DVector<Complex64> {
        let mut v = DVector::zeros(self.dim());
        v[0] = Complex64::new(1.0, 0.0);
        v
    }

    /// `<Psi| phi(x_1) ... phi(x_n) |Psi>`; exact once `cutoff >= ceil(n/2)`.
    pub fn vacuum_npoint(&self, xs: &[DVector<f64>]) -> Result<Complex64, PhaseSpaceError> {
        let needed = xs.len().div_ceil(2);
        if self.cutoff < needed {
            return Err(PhaseSpaceError::TruncationInsufficient { needed, cutoff: self.cutoff });
        }
        let mut v = self.vacuum();
        for x in xs.iter().rev() {
            v = self.field(x) * v;
        }
        Ok(v[0])
    }

    fn sector_columns(&self, sector: usize) -> Result<Vec<usize>, PhaseSpaceError> {
        if sector + 1 > self.cutoff {
            return Err(PhaseSpaceError::TruncationInsufficient { needed: sector + 1, cutoff: self.cutoff });
        }
        Ok((0..self.dim()).filter(|&c| self.basis[c].iter().sum::<usize>() <= sector).collect())
    }

    /// Largest deviation of `[a_i, a_j^dagger] - delta_ij` on states with at most
    /// `sector` particles; needs `sector <= cutoff - 1`.
    pub fn ccr_defect(&self, sector: usize) -> Result<f64, PhaseSpaceError> {
        let cols = self.sector_columns(sector)?;
        let mut worst = 0.0_f64;
        for i in 0..self.modes() {
            for j in 0..self.modes() {
                let a = &self.annihilators[i];
                let ad = self.creation(j);
                let c = a * &ad - &ad * a;
                for &col in &cols {
                    for row in 0..self.dim() {
                        let want = if i == j && row == col { 1.0 } else { 0.0 };
                        worst = worst.max((c[(row, col)] - want).norm());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Largest deviation of `[phi(x), phi(y)] - i tau(x,y)` on the guarded sector.
    pub fn field_commutator_defect(
        &self,
        x: &DVector<f64>,
        y: &DVector<f64>,
        tau_xy: f64,
        sector: usize,
    ) -> Result<f64, PhaseSpaceError> {
        let cols = self.sector_columns(sector)?;
        let (fx, fy) = (self.field(x), self.field(y));
        let c = &fx * &fy - &fy * &fx;
        let mut worst = 0.0_f64;
        for &col in &cols {
            for row in 0..self.dim() {
                let want = if row == col { Complex64::new(0.0, tau_xy) } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((c[(row, col)] - want).norm());
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::standard_symplectic;
    use crate::one_particle::one_particle;

    #[test]
    fn sizes_and_ccr() {
        let s = one_particle(&(DMatrix::identity(2, 2) * 0.5), &standard_symplectic(1)).unwrap();
        let f = fock_represent(&s, 4).unwrap();
        assert_eq!(f.dim(), 5);
        assert!(f.ccr_defect(2).unwrap() < 1e-15);
        assert!(f.ccr_defect(3).unwrap() < 1e-15);
        assert!(matches!(f.ccr_defect(4), Err(PhaseSpaceError::TruncationInsufficient { .. })));
    }

    #[test]
    fn guards() {
        let s = one_particle(&DMatrix::identity(6, 6), &standard_symplectic(3)).unwrap();
        assert!(matches!(fock_represent(&s, 2), Err(PhaseSpaceError::FockGuard(_))));
    }
}
