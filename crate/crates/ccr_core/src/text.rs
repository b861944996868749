//! Canonical text form: `(p/q+r/s*i)*phi(i1)phi(i2)... + ...`, unit terms as `(c)`.

use num_complex::Complex;
use num_traits::One;

use crate::element::{AlgebraElement, Word};
use crate::error::AlgebraError;
use crate::scalar::{scalar_from_text, Real};

pub fn to_text<R: Real>(a: &AlgebraElement<R>) -> String {
    a.to_string()
}

/// Parses the canonical form. Also accepts terms without a coefficient
/// (`phi(1)phi(2)`) and `*` between factors.
pub fn parse_element<R: Real>(s: &str) -> Result<AlgebraElement<R>, AlgebraError> {
    let s = s.trim();
    let mut out = AlgebraElement::zero();
    if s == "0" {
        return Ok(out);
    }
    for term in split_terms(s) {
        let (w, c) = parse_term::<R>(term.trim())?;
        out.add_term(w, c);
    }
    Ok(out)
}

fn split_terms(s: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    let b = s.as_bytes();
    for (k, &ch) in b.iter().enumerate() {
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term<R: Real>(t: &str) -> Result<(Word, Complex<R>), AlgebraError> {
    let err = || AlgebraError::Parse(format!("bad term `{}`", t));
    let mut rest = t;
    let mut coeff = Complex::one();
    if let Some(inner) = rest.strip_prefix('(') {
        let close = inner.find(')').ok_or_else(err)?;
        coeff = scalar_from_text(&inner[..close]).ok_or_else(err)?;
        rest = inner[close + 1..].trim_start();
        rest = rest.strip_prefix('*').unwrap_or(rest).trim_start();
    }
    let mut word = Vec::new();
    while !rest.is_empty() {
        if rest == "1" {
            break;
        }
        let body = rest.strip_prefix("phi(").ok_or_else(err)?;
        let close = body.find(')').ok_or_else(err)?;
        let idx: u32 = body[..close].trim().parse().map_err(|_| err())?;
        if idx == 0 {
            return Err(err());
        }
        word.push(idx);
        rest = body[close + 1..].trim_start();
        rest = rest.strip_prefix('*').unwrap_or(rest).trim_start();
    }
    Ok((word, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use num_rational::BigRational;

    #[test]
    fn canonical_form() {
        let a = AlgebraElement::<BigRational>::from_terms([
            (vec![1, 2], Complex::new(rational(1, 2), rational(-3, 1))),
            (vec![], Complex::new(rational(0, 1), rational(1, 1))),
        ]);
        let s = to_text(&a);
        assert_eq!(s, "(0+1*i) + (1/2-3*i)*phi(1)phi(2)");
        assert_eq!(parse_element::<BigRational>(&s).unwrap(), a);
    }

    #[test]
    fn loose_input() {
        let a = parse_element::<BigRational>("phi(2)*phi(1) + (2)").unwrap();
        assert_eq!(a.coeff(&[2, 1]), Complex::one());
        assert_eq!(a.unit_coeff(), Complex::new(rational(2, 1), rational(0, 1)));
        assert!(parse_element::<BigRational>("phi(0)").is_err());
        assert!(parse_element::<BigRational>("psi(1)").is_err());
        assert!(parse_element::<BigRational>("0").unwrap().is_zero());
    }
}
