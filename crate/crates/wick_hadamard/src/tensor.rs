use std::collections::BTreeMap;

use ccr_core::scalar::real;
use ccr_core::{GeneratorIndex, Real};
use num_complex::Complex;
use num_traits::Zero;

use crate::error::WickError;
use crate::normal::NormalOrdered;
use crate::ordering::DifferenceKernel;

pub const MAX_BASIS: usize = 8;
pub const MAX_ALPHA_DEGREE: usize = 6;

/// Symmetric rank-`degree` tensor over a basis `f_0..f_{basis-1}`, stored densely
/// (row-major multi-index). Basis element `f_i` is generator label `i + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct WickTensor<R: Real> {
    degree: usize,
    basis: usize,
    data: Vec<Complex<R>>,
}

fn multi_index(mut flat: usize, degree: usize, basis: usize) -> Vec<usize> {
    let mut idx = vec![0; degree];
    for slot in idx.iter_mut().rev() {
        *slot = flat % basis;
        flat /= basis;
    }
    idx
}

fn flat_index(idx: &[usize], basis: usize) -> usize {
    idx.iter().fold(0, |acc, i| acc * basis + i)
}

impl<R: Real> WickTensor<R> {
    pub fn new(degree: usize, basis: usize, data: Vec<Complex<R>>) -> Result<Self, WickError> {
        if basis == 0 || basis > MAX_BASIS {
            return Err(WickError::Shape(format!("basis size {basis} outside 1..={MAX_BASIS}")));
        }
        if data.len() != basis.pow(degree as u32) {
            return Err(WickError::Shape(format!("degree {degree} over {basis} needs {} entries", basis.pow(degree as u32))));
        }
        let t = WickTensor { degree, basis, data };
        let defect = t.symmetry_defect();
        if defect > R::tolerance().as_f64() {
            return Err(WickError::NotSymmetric { defect });
        }
        Ok(t)
    }

    /// Tensor with entries `f(sorted multi-index)`, symmetric by construction.
    pub fn from_multiset_fn(degree: usize, basis: usize, mut f: impl FnMut(&[usize]) -> Complex<R>) -> Result<Self, WickError> {
        let mut cache: BTreeMap<Vec<usize>, Complex<R>> = BTreeMap::new();
        let data = (0..basis.pow(degree as u32))
            .map(|flat| {
                let mut idx = multi_index(flat, degree, basis);
                idx.sort_unstable();
                cache.entry(idx.clone()).or_insert_with(|| f(&idx)).clone()
            })
            .collect();
        Self::new(degree, basis, data)
    }

    pub fn scalar(basis: usize, c: Complex<R>) -> Self {
        WickTensor { degree: 0, basis, data: vec![c] }
    }

    /// `f^{(x) n}` for a coefficient vector `f`.
    pub fn power(f: &[Complex<R>], degree: usize) -> Result<Self, WickError> {
        Self::from_multiset_fn(degree, f.len(), |idx| idx.iter().fold(real(R::one()), |acc, i| acc * f[*i].clone()))
    }

    pub fn zeros(degree: usize, basis: usize) -> Self {
        WickTensor { degree, basis, data: vec![Complex::zero(); basis.pow(degree as u32)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> usize {
        self.basis
    }

    pub fn get(&self, idx: &[usize]) -> Complex<R> {
        self.data[flat_index(idx, self.basis)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Largest `|t[idx] - t[sorted idx]|`.
    pub fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for flat in 0..self.data.len() {
            let mut idx = multi_index(flat, self.degree, self.basis);
            idx.sort_unstable();
            let d = self.data[flat].clone() - self.data[flat_index(&idx, self.basis)].clone();
            worst = worst.max(d.re.as_f64().abs().max(d.im.as_f64().abs()));
        }
        worst
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        WickTensor { data: self.data.iter().map(|x| x.clone() * c.clone()).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, WickError> {
        if self.degree != other.degree || self.basis != other.basis {
            return Err(WickError::Shape("adding tensors of different shape".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(WickTensor { data, ..self.clone() })
    }

    pub fn conj(&self) -> Self {
        WickTensor { data: self.data.iter().map(|x| x.conj()).collect(), ..self.clone() }
    }

    /// `<d, t>` over the first two slots, lowering the degree by two.
    pub fn contract(&self, d: &DifferenceKernel<R>) -> Result<Self, WickError> {
        if self.degree < 2 {
            return Err(WickError::Shape("contraction needs degree >= 2".into()));
        }
        if d.dim() != self.basis {
            return Err(WickError::Shape(format!("difference kernel on {} elements, tensor on {}", d.dim(), self.basis)));
        }
        let b = self.basis;
        let tail = b.pow(self.degree as u32 - 2);
        let mut data = vec![Complex::zero(); tail];
        for i in 0..b {
            for j in 0..b {
                let dij = d.at(i, j);
                if dij.is_zero() {
                    continue;
                }
                let base = (i * b + j) * tail;
                for (k, slot) in data.iter_mut().enumerate() {
                    *slot = slot.clone() + dij.clone() * self.data[base + k].clone();
                }
            }
        }
        Ok(WickTensor { degree: self.degree - 2, basis: b, data })
    }

    /// `W_n(t) = sum t_{i_1..i_n} :phi(f_{i_1})...phi(f_{i_n}):` in the multiset basis.
    pub fn to_normal_ordered(&self) -> NormalOrdered<R> {
        let mut out = NormalOrdered::zero();
        for (flat, c) in self.data.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word: Vec<GeneratorIndex> =
                multi_index(flat, self.degree, self.basis).iter().map(|i| *i as GeneratorIndex + 1).collect();
            out.add_term(&word, c.clone());
        }
        out
    }
}

/// Finite sum of `W_n(t_n)` over degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct WickPolynomial<R: Real> {
    basis: usize,
    terms: BTreeMap<usize, WickTensor<R>>,
}

impl<R: Real> WickPolynomial<R> {
    pub fn new(basis: usize) -> Self {
        WickPolynomial { basis, terms: BTreeMap::new() }
    }

    pub fn from_tensor(t: WickTensor<R>) -> Self {
        let mut p = Self::new(t.basis);
        p.add_tensor(&t).expect("same basis");
        p
    }

    pub fn basis(&self) -> usize {
        self.basis
    }

    /// Accumulates `t`; degrees whose tensor cancels to zero are dropped.
    pub fn add_tensor(&mut self, t: &WickTensor<R>) -> Result<(), WickError> {
        if t.basis != self.basis {
            return Err(WickError::Shape("tensor on a different basis".into()));
        }
        let sum = match self.terms.get(&t.degree) {
            Some(cur) => cur.add(t)?,
            None => t.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&t.degree);
        } else {
            self.terms.insert(t.degree, sum);
        }
        Ok(())
    }

    pub fn tensor(&self, degree: usize) -> Option<&WickTensor<R>> {
        self.terms.get(&degree)
    }

    pub fn tensors(&self) -> impl Iterator<Item = &WickTensor<R>> {
        self.terms.values()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn conj(&self) -> Self {
        WickPolynomial { basis: self.basis, terms: self.terms.iter().map(|(k, t)| (*k, t.conj())).collect() }
    }

    pub fn to_normal_ordered(&self) -> NormalOrdered<R> {
        self.terms.values().fold(NormalOrdered::zero(), |acc, t| acc.add(&t.to_normal_ordered()))
    }
}

/// `C(n, 2k) (2k-1)!!`, the number of ways to pick `k` disjoint pairs from `n` slots.
pub fn alpha_coefficient(n: usize, k: usize) -> u64 {
    let mut binom: u64 = 1;
    for i in 0..2 * k {
        binom = binom * (n - i) as u64 / (i + 1) as u64;
    }
    let double_fact: u64 = (1..2 * k as u64).step_by(2).product();
    binom * double_fact
}

/// `alpha_d(W_n(t)) = sum_k C(n,2k) (2k-1)!! W_{n-2k}(<d^{(x)k}, t>)`, extended linearly.
pub fn alpha_map<R: Real>(d: &DifferenceKernel<R>, w: &WickPolynomial<R>) -> Result<WickPolynomial<R>, WickError> {
    if d.dim() != w.basis {
        return Err(WickError::Shape(format!("difference kernel on {} elements, tensors on {}", d.dim(), w.basis)));
    }
    let mut out = WickPolynomial::new(w.basis);
    for t in w.terms.values() {
        if t.degree > MAX_ALPHA_DEGREE {
            return Err(WickError::DegreeGuard { degree: t.degree, max: MAX_ALPHA_DEGREE });
        }
        let mut cur = t.clone();
        for k in 0..=t.degree / 2 {
            if k > 0 {
                cur = cur.contract(d)?;
            }
            let c = R::from_u64(alpha_coefficient(t.degree, k)).expect("small integer");
            out.add_tensor(&cur.scale(&real(c)))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        assert_eq!(alpha_coefficient(2, 1), 1);
        assert_eq!(alpha_coefficient(4, 1), 6);
        assert_eq!(alpha_coefficient(4, 2), 3);
        assert_eq!(alpha_coefficient(6, 3), 15);
        assert_eq!(alpha_coefficient(6, 2), 45);
        assert_eq!(alpha_coefficient(5, 0), 1);
    }

    #[test]
    fn indices_round_trip() {
        for flat in 0..125 {
            assert_eq!(flat_index(&multi_index(flat, 3, 5), 5), flat);
        }
    }
}
