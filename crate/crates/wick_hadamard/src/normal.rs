//! The basis of normal-ordered monomials `:phi(f_{i_1})...phi(f_{i_k}):_kappa`,
//! labelled by sorted multisets of generator labels.

use ccr_core::{AlgebraElement, GeneratorIndex, Real, Word};
use num_complex::Complex;
use num_traits::One;

use crate::error::WickError;
use crate::ordering::OrderingKernel;

/// Longest word expanded by the pairing sums.
pub const MAX_WICK_DEGREE: usize = 10;
/// Degree guard for each factor of [`wick_product`].
pub const MAX_PRODUCT_DEGREE: usize = 4;

/// Linear combination of `:...:_kappa` monomials; every key is sorted.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct NormalOrdered<R: Real> {
    terms: AlgebraElement<R>,
}

impl<R: Real> NormalOrdered<R> {
    pub fn zero() -> Self {
        NormalOrdered { terms: AlgebraElement::zero() }
    }

    /// `c :phi(w_1)...phi(w_k):`, any order of `w`.
    pub fn monomial(word: &[GeneratorIndex], c: Complex<R>) -> Self {
        let mut out = Self::zero();
        out.add_term(word, c);
        out
    }

    pub fn add_term(&mut self, word: &[GeneratorIndex], c: Complex<R>) {
        let mut key = word.to_vec();
        key.sort_unstable();
        self.terms.add_term(key, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Complex<R>)> {
        self.terms.terms()
    }

    pub fn coeff(&self, word: &[GeneratorIndex]) -> Complex<R> {
        let mut key = word.to_vec();
        key.sort_unstable();
        self.terms.coeff(&key)
    }

    /// Coefficient of the unit, i.e. the expectation in the state `kappa` when
    /// `kappa` is a state kernel.
    pub fn unit_coeff(&self) -> Complex<R> {
        self.terms.unit_coeff()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.terms.degree()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn sub(&self, other: &Self) -> Self {
        NormalOrdered { terms: &self.terms - &other.terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        NormalOrdered { terms: &self.terms + &other.terms }
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        NormalOrdered { terms: self.terms.scale(c) }
    }

    /// Raw storage: words stand for normal-ordered monomials.
    pub fn as_element(&self) -> &AlgebraElement<R> {
        &self.terms
    }
}

/// Contracted position pairs `(a, b)` with `a < b`, and the unpaired positions.
type Matching = (Vec<(usize, usize)>, Vec<usize>);

/// All partial matchings of positions `0..n`.
fn partial_matchings(n: usize) -> Vec<Matching> {
    fn go(free: &[usize], pairs: &mut Vec<(usize, usize)>, rest: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let Some((&first, tail)) = free.split_first() else {
            out.push((pairs.clone(), rest.clone()));
            return;
        };
        rest.push(first);
        go(tail, pairs, rest, out);
        rest.pop();
        for k in 0..tail.len() {
            pairs.push((first, tail[k]));
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| *v).collect();
            go(&remaining, pairs, rest, out);
            pairs.pop();
        }
    }
    let free: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&free, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn check_degree(n: usize, max: usize) -> Result<(), WickError> {
    if n > max {
        return Err(WickError::DegreeGuard { degree: n, max });
    }
    Ok(())
}

/// Expands `a` in the `:...:_kappa` basis through Wick's theorem:
/// `phi(w_1)...phi(w_n) = sum_P prod_{(a<b) in P} kappa(w_a, w_b) :phi(rest):`.
pub fn normal_order<R: Real>(a: &AlgebraElement<R>, kappa: &OrderingKernel<R>) -> Result<NormalOrdered<R>, WickError> {
    let mut out = NormalOrdered::zero();
    for (word, c) in a.terms() {
        check_degree(word.len(), MAX_WICK_DEGREE)?;
        kappa.check_labels(word)?;
        for (pairs, rest) in partial_matchings(word.len()) {
            let mut coeff = c.clone();
            for (p, q) in &pairs {
                coeff = coeff * kappa.at(word[*p], word[*q]);
            }
            let key: Vec<GeneratorIndex> = rest.iter().map(|p| word[*p]).collect();
            out.add_term(&key, coeff);
        }
    }
    Ok(out)
}

/// Inverse of [`normal_order`]: `:phi(w_1)...phi(w_n): = sum_P (-1)^|P| prod kappa(w_a, w_b) phi(rest)`,
/// returned as an (unordered) algebra element.
pub fn wick_expand<R: Real>(no: &NormalOrdered<R>, kappa: &OrderingKernel<R>) -> Result<AlgebraElement<R>, WickError> {
    let mut out = AlgebraElement::zero();
    for (word, c) in no.terms() {
        out = &out + &wick_expand_word(word, kappa)?.scale(c);
    }
    Ok(out)
}

/// The inverse Wick formula applied to `word` in the order given. Up to the
/// commutation relations the result does not depend on that order.
pub fn wick_expand_word<R: Real>(word: &[GeneratorIndex], kappa: &OrderingKernel<R>) -> Result<AlgebraElement<R>, WickError> {
    check_degree(word.len(), MAX_WICK_DEGREE)?;
    kappa.check_labels(word)?;
    let mut out = AlgebraElement::zero();
    for (pairs, rest) in partial_matchings(word.len()) {
        let mut coeff = Complex::one();
        for (p, q) in &pairs {
            coeff = coeff * kappa.at(word[*p], word[*q]);
        }
        if pairs.len() % 2 == 1 {
            coeff = -coeff;
        }
        out.add_term(rest.iter().map(|p| word[*p]).collect(), coeff);
    }
    Ok(out)
}

/// All partial injections between positions `0..p` and `0..q`.
fn cross_matchings(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, p: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == p {
            out.push(cur.clone());
            return;
        }
        go(i + 1, p, used, cur, out);
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, p, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, p, &mut vec![false; q], &mut Vec::new(), &mut out);
    out
}

/// `:A: :B:` in the normal-ordered basis: contractions only between the two
/// factors, `kappa(a, b)` with `a` from the left factor.
pub fn wick_product<R: Real>(
    a: &NormalOrdered<R>,
    b: &NormalOrdered<R>,
    kappa: &OrderingKernel<R>,
) -> Result<NormalOrdered<R>, WickError> {
    let mut out = NormalOrdered::zero();
    for (wa, ca) in a.terms() {
        check_degree(wa.len(), MAX_PRODUCT_DEGREE)?;
        kappa.check_labels(wa)?;
        for (wb, cb) in b.terms() {
            check_degree(wb.len(), MAX_PRODUCT_DEGREE)?;
            kappa.check_labels(wb)?;
            for m in cross_matchings(wa.len(), wb.len()) {
                let mut coeff = ca.clone() * cb.clone();
                let mut keep_a = vec![true; wa.len()];
                let mut keep_b = vec![true; wb.len()];
                for (i, j) in &m {
                    coeff = coeff * kappa.at(wa[*i], wb[*j]);
                    keep_a[*i] = false;
                    keep_b[*j] = false;
                }
                let key: Vec<GeneratorIndex> = wa
                    .iter()
                    .zip(&keep_a)
                    .chain(wb.iter().zip(&keep_b))
                    .filter(|(_, k)| **k)
                    .map(|(l, _)| *l)
                    .collect();
                out.add_term(&key, coeff);
            }
        }
    }
    Ok(out)
}

/// `:phi(f):` as a one-term combination.
pub fn field<R: Real>(label: GeneratorIndex) -> NormalOrdered<R> {
    NormalOrdered::monomial(&[label], Complex::one())
}

/// Commutator `[:A:, :B:]` computed in the normal-ordered basis.
pub fn wick_commutator<R: Real>(
    a: &NormalOrdered<R>,
    b: &NormalOrdered<R>,
    kappa: &OrderingKernel<R>,
) -> Result<NormalOrdered<R>, WickError> {
    Ok(wick_product(a, b, kappa)?.sub(&wick_product(b, a, kappa)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        // telephone numbers
        let counts: Vec<usize> = (0..8).map(|n| partial_matchings(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232]);
        assert_eq!(cross_matchings(2, 2).len(), 7);
        assert_eq!(cross_matchings(3, 1).len(), 4);
    }
}
