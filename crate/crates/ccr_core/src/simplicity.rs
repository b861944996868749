//! Iterated-commutator witness that no non-scalar element is central.

use num_complex::Complex;

use crate::element::AlgebraElement;
use crate::error::AlgebraError;
use crate::normal::{commutator, normal_form};
use crate::pairing::PairingForm;
use crate::scalar::Real;

/// Unit coefficient of `[...[a, phi(u_1)], ..., phi(u_k)]` with `k` the top degree of `nf(a)`.
///
/// Scalars have no top-degree part to strip; for them any non-empty probe list is
/// accepted and the result is zero.
pub fn simplicity_probe<R: Real>(
    a: &AlgebraElement<R>,
    probes: &[Vec<R>],
    e: &PairingForm<R>,
) -> Result<Complex<R>, AlgebraError> {
    let a = normal_form(a, e);
    let k = a.degree();
    let arity_ok = if k == 0 { !probes.is_empty() } else { probes.len() == k };
    if !arity_ok {
        return Err(AlgebraError::Arity { degree: k, probes: probes.len() });
    }
    if let Some(u) = probes.iter().find(|u| u.len() != e.dim()) {
        return Err(AlgebraError::ProbeLength { expected: e.dim(), got: u.len() });
    }
    let mut c = a;
    for u in probes {
        c = commutator(&c, &AlgebraElement::field(u), e);
    }
    Ok(c.unit_coeff())
}

/// Searches basis-vector probe tuples for a nonzero witness.
///
/// The iterated commutator is multilinear in the probes, so it vanishes on all
/// of the span iff it vanishes on every tuple of basis vectors.
pub fn find_simplicity_witness<R: Real>(
    a: &AlgebraElement<R>,
    e: &PairingForm<R>,
) -> Option<(Vec<Vec<R>>, Complex<R>)> {
    let k = normal_form(a, e).degree();
    let n = e.dim();
    if k == 0 || n == 0 {
        return None;
    }
    let basis = |i: usize| -> Vec<R> {
        (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()
    };
    let mut idx = vec![0usize; k];
    loop {
        let probes: Vec<Vec<R>> = idx.iter().map(|&i| basis(i)).collect();
        if let Ok(v) = simplicity_probe(a, &probes, e) {
            let tol = R::tolerance();
            if v.re.abs() > tol || v.im.abs() > tol {
                return Some((probes, v));
            }
        }
        // odometer over n^k tuples
        let mut p = 0;
        loop {
            if p == k {
                return None;
            }
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::{imag_unit, rational, real};
    use num_rational::BigRational;

    type El = AlgebraElement<BigRational>;

    #[test]
    fn degree_one_probe() {
        let mut e = PairingForm::zero(2);
        e.set(1, 2, rational(7, 2)).unwrap();
        let v = simplicity_probe(&El::generator(1), &[vec![rational(0, 1), rational(1, 1)]], &e).unwrap();
        assert_eq!(v, imag_unit::<BigRational>() * real(rational(7, 2)));
    }

    #[test]
    fn unit_gives_zero() {
        let e = PairingForm::<BigRational>::standard_symplectic(1);
        let v = simplicity_probe(&El::one(), &[vec![rational(1, 1), rational(2, 1)]], &e).unwrap();
        assert!(v.is_zero());
        assert!(simplicity_probe(&El::one(), &[], &e).is_err());
    }

    #[test]
    fn quadratic_probe_is_nonzero() {
        let e = PairingForm::<BigRational>::standard_symplectic(1);
        let one = rational(1, 1);
        let zero = rational(0, 1);
        let probes = vec![vec![zero.clone(), one.clone()], vec![one, zero]];
        let v = simplicity_probe(&El::word(&[1, 2]), &probes, &e).unwrap();
        assert!(!v.is_zero());
    }

    #[test]
    fn arity_is_checked() {
        let e = PairingForm::<BigRational>::standard_symplectic(1);
        let r = simplicity_probe(&El::word(&[1, 2]), &[vec![rational(1, 1), rational(0, 1)]], &e);
        assert_eq!(r, Err(AlgebraError::Arity { degree: 2, probes: 1 }));
    }
}
