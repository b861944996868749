use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{real, scalar_to_text, Real};

/// Label of an abstract real test function `f_i`. Labels start at 1.
pub type GeneratorIndex = u32;

/// Ordered product of generators; the empty word is the unit.
pub type Word = Vec<GeneratorIndex>;

/// A single `coeff * phi(i1)...phi(ik)` term.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<R: Real> {
    pub word: Word,
    pub coeff: Complex<R>,
}

impl<R: Real> Monomial<R> {
    pub fn new(word: Word, coeff: Complex<R>) -> Self {
        Monomial { word, coeff }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

/// Finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<R: Real> {
    terms: BTreeMap<Word, Complex<R>>,
}

impl<R: Real> Default for AlgebraElement<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Real> AlgebraElement<R> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Complex::one())
    }

    pub fn scalar(c: Complex<R>) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// `phi(f_i)`
    pub fn generator(i: GeneratorIndex) -> Self {
        Self::monomial(vec![i], Complex::one())
    }

    pub fn word(word: &[GeneratorIndex]) -> Self {
        Self::monomial(word.to_vec(), Complex::one())
    }

    pub fn monomial(word: Word, c: Complex<R>) -> Self {
        let mut e = Self::zero();
        e.add_term(word, c);
        e
    }

    /// `phi(u)` for `u = sum_i u_i f_i`, with `u[0]` the weight of `f_1`.
    pub fn field(u: &[R]) -> Self {
        let mut e = Self::zero();
        for (k, uk) in u.iter().enumerate() {
            e.add_term(vec![k as GeneratorIndex + 1], real(uk.clone()));
        }
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Complex<R>)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, word: Word, c: Complex<R>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Complex<R>)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> Vec<Monomial<R>> {
        self.terms
            .iter()
            .map(|(w, c)| Monomial::new(w.clone(), c.clone()))
            .collect()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Complex<R>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[GeneratorIndex]) -> Complex<R> {
        self.terms.get(word).cloned().unwrap_or_else(Complex::zero)
    }

    /// Coefficient of the unit.
    pub fn unit_coeff(&self) -> Complex<R> {
        self.coeff(&[])
    }

    /// Length of the longest word; 0 for scalars and for zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest generator label appearing in any word.
    pub fn max_generator(&self) -> GeneratorIndex {
        self.terms
            .keys()
            .flat_map(|w| w.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c.clone())))
    }

    /// Concatenation product, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = Vec::with_capacity(wa.len() + wb.len());
                w.extend_from_slice(wa);
                w.extend_from_slice(wb);
                out.add_term(w, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Reverses every word and conjugates every coefficient.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let mut r = w.clone();
            r.reverse();
            (r, c.conj())
        }))
    }

    pub fn map_coeffs<F: Fn(&Complex<R>) -> Complex<R>>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Coefficient-wise comparison with an absolute slack.
    pub fn approx_eq(&self, other: &Self, tol: &R) -> bool {
        let diff = self - other;
        diff.terms
            .values()
            .all(|c| c.re.clone().abs() <= *tol && c.im.clone().abs() <= *tol)
    }

    /// All words are non-decreasing index sequences.
    pub fn is_ordered(&self) -> bool {
        self.terms.keys().all(|w| w.windows(2).all(|p| p[0] <= p[1]))
    }
}

pub fn multiply<R: Real>(a: &AlgebraElement<R>, b: &AlgebraElement<R>) -> AlgebraElement<R> {
    a.multiply(b)
}

pub fn star<R: Real>(a: &AlgebraElement<R>) -> AlgebraElement<R> {
    a.star()
}

impl<'a, R: Real> Add<&'a AlgebraElement<R>> for &'a AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn add(self, rhs: &'a AlgebraElement<R>) -> AlgebraElement<R> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a, R: Real> Sub<&'a AlgebraElement<R>> for &'a AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn sub(self, rhs: &'a AlgebraElement<R>) -> AlgebraElement<R> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<'a, R: Real> Mul<&'a AlgebraElement<R>> for &'a AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn mul(self, rhs: &'a AlgebraElement<R>) -> AlgebraElement<R> {
        self.multiply(rhs)
    }
}

impl<R: Real> Neg for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn neg(self) -> AlgebraElement<R> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<R: Real> Add for AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Real> Sub for AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Real> Mul for AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl<R: Real> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded order: unit first, then by degree, then lexicographic
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        for (k, (w, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", scalar_to_text(c))?;
            if !w.is_empty() {
                write!(f, "*")?;
                for i in w {
                    write!(f, "phi({})", i)?;
                }
            }
        }
        Ok(())
    }
}

impl<R: Real> fmt::Debug for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
