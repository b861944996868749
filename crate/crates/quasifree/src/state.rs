use ccr_core::scalar::to_c64;
use ccr_core::{normal_form, AlgebraElement, GeneratorIndex, Real};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::QuasifreeError;
use crate::kernel::TwoPointKernel;
use crate::pairings::{enumerate_pairings_with, Limits};

/// Gaussian state fixed by its two-point function.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasifreeState<R: Real> {
    kernel: TwoPointKernel<R>,
    limits: Limits,
}

impl<R: Real> QuasifreeState<R> {
    /// Admits the kernel after the antisymmetry check only; positivity is never assumed.
    pub fn new(kernel: TwoPointKernel<R>) -> Result<Self, QuasifreeError> {
        kernel.check_consistency()?;
        Ok(QuasifreeState { kernel, limits: Limits::default() })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn kernel(&self) -> &TwoPointKernel<R> {
        &self.kernel
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }
}

/// `omega_n(f_1, ..., f_n)`: zero for odd `n`, the pairing sum for even `n`.
pub fn npoint<R: Real>(state: &QuasifreeState<R>, idx: &[GeneratorIndex]) -> Result<Complex<R>, QuasifreeError> {
    let n = idx.len();
    if n % 2 == 1 {
        return Ok(Complex::zero());
    }
    if n > state.limits.max_pairing_n {
        return Err(QuasifreeError::DegreeGuard { n, max: state.limits.max_pairing_n });
    }
    let mut table = vec![Complex::zero(); n * n];
    for a in 0..n {
        for b in a + 1..n {
            table[a * n + b] = state.kernel.get(idx[a], idx[b])?;
        }
    }
    let mut open: Vec<usize> = (0..n).collect();
    Ok(pair_sum(&table, n, &mut open))
}

// Expansion along the first open slot; visits matchings in the same order as
// `enumerate_pairings`.
fn pair_sum<R: Real>(table: &[Complex<R>], n: usize, open: &mut Vec<usize>) -> Complex<R> {
    if open.is_empty() {
        return Complex::one();
    }
    let first = open.remove(0);
    let mut acc = Complex::zero();
    for k in 0..open.len() {
        let w = table[first * n + open[k]].clone();
        if w.is_zero() {
            continue;
        }
        let partner = open.remove(k);
        acc = acc + w * pair_sum(table, n, open);
        open.insert(k, partner);
    }
    open.insert(0, first);
    acc
}

/// Same value as [`npoint`], summed over an explicit list of matchings.
pub fn npoint_by_enumeration<R: Real>(
    state: &QuasifreeState<R>,
    idx: &[GeneratorIndex],
) -> Result<Complex<R>, QuasifreeError> {
    if idx.len() % 2 == 1 {
        return Ok(Complex::zero());
    }
    let mut acc = Complex::zero();
    for p in enumerate_pairings_with(idx.len(), &state.limits)? {
        let mut term = Complex::one();
        for (a, b) in p {
            term = term * state.kernel.get(idx[a - 1], idx[b - 1])?;
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// Linear extension of the n-point functions; `omega(1) = 1`.
pub fn evaluate<R: Real>(state: &QuasifreeState<R>, a: &AlgebraElement<R>) -> Result<Complex<R>, QuasifreeError> {
    let mut acc = Complex::zero();
    for (w, c) in a.terms() {
        if w.len() % 2 == 1 {
            continue;
        }
        acc = acc + c.clone() * npoint(state, w)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub size: usize,
    /// Row-major `[re, im]` pairs of `G_ij = omega(a_i^* a_j)`.
    pub gram: Vec<[f64; 2]>,
    pub trace: f64,
    pub min_eigenvalue: f64,
    pub tolerance: f64,
    pub psd: bool,
}

/// Gram matrix of `omega(a_i^* a_j)` and its smallest eigenvalue.
///
/// The PSD verdict allows `min_eig >= -1e-10 * trace`.
pub fn gram_positivity<R: Real>(
    state: &QuasifreeState<R>,
    elements: &[AlgebraElement<R>],
) -> Result<GramReport, QuasifreeError> {
    let max = state.limits.max_gram_degree;
    for (index, a) in elements.iter().enumerate() {
        if a.degree() > max {
            return Err(QuasifreeError::GramDegree { index, degree: a.degree(), max });
        }
    }
    let e = state.kernel.pairing_form();
    let k = elements.len();
    let stars: Vec<_> = elements.iter().map(AlgebraElement::star).collect();
    let mut g = DMatrix::<Complex<f64>>::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let prod = normal_form(&stars[i].multiply(&elements[j]), &e);
            g[(i, j)] = to_c64(&evaluate(state, &prod)?);
        }
    }
    let scale = g.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    for i in 0..k {
        for j in i..k {
            if (g[(i, j)] - g[(j, i)].conj()).norm() > 1e-10 * scale {
                return Err(QuasifreeError::KernelInconsistency(format!(
                    "Gram matrix not hermitian at ({i},{j})"
                )));
            }
        }
    }
    let trace: f64 = (0..k).map(|i| g[(i, i)].re).sum();
    let min_eigenvalue = if k == 0 {
        0.0
    } else {
        let herm = (&g + g.adjoint()) * Complex::new(0.5, 0.0);
        SymmetricEigen::new(herm).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
    };
    let tolerance = 1e-10 * trace.abs();
    Ok(GramReport {
        size: k,
        gram: g.transpose().iter().map(|z| [z.re, z.im]).collect(),
        trace,
        min_eigenvalue,
        tolerance,
        psd: min_eigenvalue >= -tolerance,
    })
}
