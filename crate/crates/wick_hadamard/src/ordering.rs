use ccr_core::scalar::{imag_unit, real};
use ccr_core::{GeneratorIndex, PairingForm, Real};
use num_complex::Complex;
use num_traits::Zero;
use quasifree::TwoPointKernel;
use serde::{Deserialize, Serialize};

use crate::error::WickError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelTag {
    /// Two-point function of a state.
    State,
    /// Symmetric Hadamard part plus `(i/2) E`.
    Hadamard,
}

/// Reference kernel `kappa(f_i, f_j)` on labels `1..=n` for normal ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderingKernel<R: Real> {
    n: usize,
    table: Vec<Complex<R>>,
    pub tag: KernelTag,
}

impl<R: Real> OrderingKernel<R> {
    /// Checks `kappa(i,j) - kappa(j,i) = i E(i,j)` within the field tolerance.
    pub fn new(n: usize, table: Vec<Complex<R>>, tag: KernelTag, e: &PairingForm<R>) -> Result<Self, WickError> {
        if table.len() != n * n || e.dim() != n {
            return Err(WickError::Shape(format!("kernel needs {n}x{n} entries and a pairing form on {n} labels")));
        }
        let k = OrderingKernel { n, table, tag };
        let tol = R::tolerance();
        for i in 1..=n as u32 {
            for j in i..=n as u32 {
                let defect = k.at(i, j) - k.at(j, i) - imag_unit::<R>() * real(e.get(i, j));
                if defect.re.abs() > tol || defect.im.abs() > tol {
                    return Err(WickError::OrderingKernelInvalid { i, j });
                }
            }
        }
        Ok(k)
    }

    pub fn from_fn(
        n: usize,
        tag: KernelTag,
        e: &PairingForm<R>,
        mut f: impl FnMut(GeneratorIndex, GeneratorIndex) -> Complex<R>,
    ) -> Result<Self, WickError> {
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                table.push(f(i, j));
            }
        }
        Self::new(n, table, tag, e)
    }

    /// The state's own two-point function; complete kernels only.
    pub fn from_two_point(k: &TwoPointKernel<R>) -> Result<Self, WickError> {
        let e = k.pairing_form();
        let n = k.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                table.push(k.get(i, j)?);
            }
        }
        Self::new(n, table, KernelTag::State, &e)
    }

    /// `H^S + (i/2) E` from a symmetric table `h` (row-major, `n x n`).
    pub fn hadamard(h: &[Complex<R>], e: &PairingForm<R>) -> Result<Self, WickError> {
        let n = e.dim();
        if h.len() != n * n {
            return Err(WickError::Shape(format!("symmetric part needs {} entries", n * n)));
        }
        let half = R::one() / (R::one() + R::one());
        Self::from_fn(n, KernelTag::Hadamard, e, |i, j| {
            h[(i as usize - 1) * n + j as usize - 1].clone() + imag_unit::<R>() * real(half.clone() * e.get(i, j))
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `kappa(i, j)`; labels must lie in `1..=n` (checked by the callers).
    pub fn at(&self, i: GeneratorIndex, j: GeneratorIndex) -> Complex<R> {
        self.table[(i as usize - 1) * self.n + j as usize - 1].clone()
    }

    pub fn get(&self, i: GeneratorIndex, j: GeneratorIndex) -> Result<Complex<R>, WickError> {
        for l in [i, j] {
            if l == 0 || l as usize > self.n {
                return Err(WickError::UnknownGenerator { label: l, n: self.n });
            }
        }
        Ok(self.at(i, j))
    }

    /// `E(i, j) = -i (kappa(i,j) - kappa(j,i))`.
    pub fn pairing_form(&self) -> PairingForm<R> {
        PairingForm::from_fn(self.n, |i, j| (self.at(i, j) - self.at(j, i)).im)
    }

    pub fn symmetric_part(&self, i: GeneratorIndex, j: GeneratorIndex) -> Complex<R> {
        let half = R::one() / (R::one() + R::one());
        (self.at(i, j) + self.at(j, i)) * half
    }

    pub(crate) fn check_labels(&self, word: &[GeneratorIndex]) -> Result<(), WickError> {
        match word.iter().find(|l| **l == 0 || **l as usize > self.n) {
            Some(l) => Err(WickError::UnknownGenerator { label: *l, n: self.n }),
            None => Ok(()),
        }
    }
}

/// Symmetric difference table `d` on a finite basis of size `n` (indices `0..n`).
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceKernel<R: Real> {
    n: usize,
    table: Vec<Complex<R>>,
}

impl<R: Real> DifferenceKernel<R> {
    pub fn new(n: usize, table: Vec<Complex<R>>) -> Result<Self, WickError> {
        if table.len() != n * n {
            return Err(WickError::Shape(format!("difference kernel needs {} entries", n * n)));
        }
        let tol = R::tolerance();
        for i in 0..n {
            for j in i + 1..n {
                let diff = table[i * n + j].clone() - table[j * n + i].clone();
                if diff.re.abs() > tol || diff.im.abs() > tol {
                    return Err(WickError::InvalidDifference { i, j });
                }
            }
        }
        Ok(DifferenceKernel { n, table })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<R>) -> Result<Self, WickError> {
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Self::new(n, table)
    }

    pub fn zero(n: usize) -> Self {
        DifferenceKernel { n, table: vec![Complex::zero(); n * n] }
    }

    /// `d = kappa_new - kappa_old` (symmetric parts), the kernel that re-expresses
    /// `kappa_old`-ordered monomials in the `kappa_new` basis.
    pub fn between(old: &OrderingKernel<R>, new: &OrderingKernel<R>) -> Result<Self, WickError> {
        if old.dim() != new.dim() {
            return Err(WickError::Shape("kernels on different label sets".into()));
        }
        Self::from_fn(old.dim(), |i, j| {
            let (a, b) = (i as u32 + 1, j as u32 + 1);
            new.symmetric_part(a, b) - old.symmetric_part(a, b)
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> Complex<R> {
        self.table[i * self.n + j].clone()
    }

    pub fn add(&self, other: &Self) -> Result<Self, WickError> {
        if self.n != other.n {
            return Err(WickError::Shape("difference kernels on different bases".into()));
        }
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(DifferenceKernel { n: self.n, table })
    }
}
