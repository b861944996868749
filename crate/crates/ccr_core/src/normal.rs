//! Canonical ordering modulo `[phi(f_i), phi(f_j)] = i E_ij 1`.
//!
//! The rule `phi_j phi_i -> phi_i phi_j - i E_ij 1` (j > i) is applied through
//! its closed form: right-multiplying an ordered word by one generator `g`
//! slides `g` left past every larger letter, each slide leaving a contraction.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::element::{AlgebraElement, GeneratorIndex, Word};
use crate::pairing::PairingForm;
use crate::scalar::{imag_unit, real, Real};

/// `nf(s * phi(g))` for an ordered word `s`, accumulated into `out` with weight `c`.
fn push_generator<R: Real>(
    s: &[GeneratorIndex],
    g: GeneratorIndex,
    c: &Complex<R>,
    e: &PairingForm<R>,
    out: &mut BTreeMap<Word, Complex<R>>,
) {
    let pos = s.partition_point(|&x| x <= g);
    let mut w = Vec::with_capacity(s.len() + 1);
    w.extend_from_slice(&s[..pos]);
    w.push(g);
    w.extend_from_slice(&s[pos..]);
    accumulate(out, w, c.clone());

    let minus_i = -imag_unit::<R>();
    for p in pos..s.len() {
        let epq = e.get(g, s[p]);
        if epq.is_zero() {
            continue;
        }
        let mut w = Vec::with_capacity(s.len() - 1);
        w.extend_from_slice(&s[..p]);
        w.extend_from_slice(&s[p + 1..]);
        accumulate(out, w, c.clone() * minus_i.clone() * real(epq));
    }
}

fn accumulate<R: Real>(out: &mut BTreeMap<Word, Complex<R>>, w: Word, c: Complex<R>) {
    let slot = out.entry(w).or_insert_with(Complex::zero);
    *slot = slot.clone() + c;
}

fn word_normal_form<R: Real>(word: &[GeneratorIndex], e: &PairingForm<R>) -> BTreeMap<Word, Complex<R>> {
    let mut acc: BTreeMap<Word, Complex<R>> = BTreeMap::new();
    acc.insert(Vec::new(), Complex::one());
    for &g in word {
        let mut next = BTreeMap::new();
        for (s, c) in &acc {
            if !c.is_zero() {
                push_generator(s, g, c, e, &mut next);
            }
        }
        acc = next;
    }
    acc
}

/// Unique representative with every word non-decreasing.
pub fn normal_form<R: Real>(a: &AlgebraElement<R>, e: &PairingForm<R>) -> AlgebraElement<R> {
    let mut out = AlgebraElement::zero();
    for (w, c) in a.terms() {
        if w.windows(2).all(|p| p[0] <= p[1]) {
            out.add_term(w.clone(), c.clone());
            continue;
        }
        for (nw, nc) in word_normal_form(w, e) {
            out.add_term(nw, nc * c.clone());
        }
    }
    out
}

/// `nf(ab - ba)`
pub fn commutator<R: Real>(
    a: &AlgebraElement<R>,
    b: &AlgebraElement<R>,
    e: &PairingForm<R>,
) -> AlgebraElement<R> {
    normal_form(&(&a.multiply(b) - &b.multiply(a)), e)
}

/// Applies the rewrite rule once, at the leftmost descent of every word.
/// Returns `None` once everything is ordered. Used as a brute-force oracle.
pub fn rewrite_step<R: Real>(a: &AlgebraElement<R>, e: &PairingForm<R>) -> Option<AlgebraElement<R>> {
    let mut changed = false;
    let mut out = AlgebraElement::zero();
    for (w, c) in a.terms() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => out.add_term(w.clone(), c.clone()),
            Some(k) => {
                changed = true;
                let (j, i) = (w[k], w[k + 1]);
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                out.add_term(swapped, c.clone());
                let mut short = w.clone();
                short.drain(k..k + 2);
                out.add_term(short, -c.clone() * imag_unit() * real(e.get(i, j)));
            }
        }
    }
    changed.then_some(out)
}
