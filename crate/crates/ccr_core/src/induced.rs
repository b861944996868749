//! Homomorphisms induced by linear maps of the generator span.


use crate::element::{AlgebraElement, Word};
use crate::error::AlgebraError;
use crate::linalg::{self, Matrix};
use crate::pairing::PairingForm;
use crate::scalar::{real, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `E(sx, sy) = E(x, y)`; induces a linear *-homomorphism.
    Preserving,
    /// `E(sx, sy) = -E(x, y)`; induces an anti-linear homomorphism.
    Reversing,
}

impl Parity {
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Preserving
        } else {
            Parity::Reversing
        }
    }
}

/// `alpha(phi(x)) = phi(sigma x)`. Column `i` of `sigma` is the image of `f_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap<R: Real> {
    sigma: Matrix<R>,
    parity: Parity,
}

/// Checks `sigma^T E sigma = +-E` (as selected by `parity`) and builds the map.
pub fn induced_map<R: Real>(
    sigma: Matrix<R>,
    parity: Parity,
    e: &PairingForm<R>,
) -> Result<InducedMap<R>, AlgebraError> {
    let n = e.dim();
    if sigma.len() != n || sigma.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::SymmetryShape { expected: n });
    }
    let em = e.to_matrix();
    let pulled = linalg::matmul(&linalg::matmul(&linalg::transpose(&sigma), &em), &sigma);
    let target: Matrix<R> = match parity {
        Parity::Preserving => em,
        Parity::Reversing => em.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect(),
    };
    let residual = linalg::max_abs_diff(&pulled, &target);
    let scale = sigma
        .iter()
        .flatten()
        .fold(R::one(), |m, x| if x.abs() > m { x.abs() } else { m });
    if residual > R::tolerance() * scale.clone() * scale {
        return Err(AlgebraError::InvalidSymmetry { residual: residual.as_f64() });
    }
    Ok(InducedMap { sigma, parity })
}

impl<R: Real> InducedMap<R> {
    pub fn identity(n: usize) -> Self {
        InducedMap { sigma: linalg::identity(n), parity: Parity::Preserving }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.sigma
    }

    fn image_of(&self, g: u32) -> Vec<(u32, R)> {
        let col = g as usize - 1;
        self.sigma
            .iter()
            .enumerate()
            .filter(|(_, row)| !row[col].is_zero())
            .map(|(r, row)| (r as u32 + 1, row[col].clone()))
            .collect()
    }

    pub fn apply(&self, a: &AlgebraElement<R>) -> AlgebraElement<R> {
        let mut out = AlgebraElement::zero();
        for (w, c) in a.terms() {
            let c = match self.parity {
                Parity::Preserving => c.clone(),
                Parity::Reversing => c.conj(),
            };
            // expand the product of images letter by letter
            let mut partial: Vec<(Word, R)> = vec![(Vec::new(), R::one())];
            for &g in w {
                let img = self.image_of(g);
                let mut next = Vec::with_capacity(partial.len() * img.len());
                for (pw, pc) in &partial {
                    for (h, s) in &img {
                        let mut nw = pw.clone();
                        nw.push(*h);
                        next.push((nw, pc.clone() * s.clone()));
                    }
                }
                partial = next;
            }
            for (pw, pc) in partial {
                out.add_term(pw, c.clone() * real(pc));
            }
        }
        out
    }

    /// `self . other`, i.e. `alpha^{sigma sigma'}`.
    pub fn compose(&self, other: &InducedMap<R>) -> InducedMap<R> {
        InducedMap {
            sigma: linalg::matmul(&self.sigma, &other.sigma),
            parity: self.parity.compose(other.parity),
        }
    }

    pub fn inverse(&self) -> Result<InducedMap<R>, AlgebraError> {
        let inv = linalg::inverse(&self.sigma, &R::tolerance()).ok_or(AlgebraError::SingularSymmetry)?;
        Ok(InducedMap { sigma: inv, parity: self.parity })
    }
}
