//! Coefficient fields: exact rationals or binary floats, both lifted to complex numbers.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// Which arithmetic a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

/// Real coefficient field. Implemented for `BigRational`, `f64` and `f32`.
pub trait Real:
    Clone + Debug + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    const MODE: Mode;

    /// Comparison slack used by float mode; zero for exact arithmetic.
    fn tolerance() -> Self;

    fn as_f64(&self) -> f64;

    /// Exact conversion for rationals (every finite double is a dyadic rational).
    fn from_double(x: f64) -> Option<Self>;

    fn to_text(&self) -> String;

    fn parse_text(s: &str) -> Option<Self>;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::String(s) => Self::parse_text(s),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Self::from_i64(i)
                } else {
                    Self::from_double(n.as_f64()?)
                }
            }
            _ => None,
        }
    }

    fn approx_eq(&self, other: &Self, tol: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= *tol
    }
}

impl Real for BigRational {
    const MODE: Mode = Mode::Exact;

    fn tolerance() -> Self {
        Self::zero()
    }

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_double(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn to_text(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let q = BigInt::from_str(q.trim()).ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(BigRational::new(BigInt::from_str(p.trim()).ok()?, q))
            }
            None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_text())
    }
}

macro_rules! float_real {
    ($t:ty, $tol:expr) => {
        impl Real for $t {
            const MODE: Mode = Mode::Float;

            fn tolerance() -> Self {
                $tol
            }

            fn as_f64(&self) -> f64 {
                *self as f64
            }

            fn from_double(x: f64) -> Option<Self> {
                Some(x as $t)
            }

            fn to_text(&self) -> String {
                format!("{:?}", self)
            }

            fn parse_text(s: &str) -> Option<Self> {
                s.trim().parse().ok()
            }

            fn to_json(&self) -> Value {
                serde_json::Number::from_f64(*self as f64)
                    .map(Value::Number)
                    .unwrap_or(Value::Null)
            }
        }
    };
}

float_real!(f64, 1e-12);
float_real!(f32, 1e-5);

/// Complex coefficient over a real field.
pub type Scalar<R> = Complex<R>;

pub fn imag_unit<R: Real>() -> Complex<R> {
    Complex::new(R::zero(), R::one())
}

pub fn real<R: Real>(r: R) -> Complex<R> {
    Complex::new(r, R::zero())
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_c64<R: Real>(z: &Complex<R>) -> Complex<f64> {
    Complex::new(z.re.as_f64(), z.im.as_f64())
}

pub fn is_zero_within<R: Real>(z: &Complex<R>, tol: &R) -> bool {
    z.re.abs() <= *tol && z.im.abs() <= *tol
}

/// `re+im*i`, with the sign of the imaginary part folded into the separator.
pub fn scalar_to_text<R: Real>(z: &Complex<R>) -> String {
    let re = z.re.to_text();
    if z.im.is_negative() {
        format!("{}-{}*i", re, (-z.im.clone()).to_text())
    } else {
        format!("{}+{}*i", re, z.im.to_text())
    }
}

pub fn scalar_from_text<R: Real>(s: &str) -> Option<Complex<R>> {
    let s = s.trim();
    let body = match s.strip_suffix("*i") {
        Some(b) => b,
        None => return Some(real(R::parse_text(s)?)),
    };
    let bytes = body.as_bytes();
    // the separator is the last sign that is neither leading nor part of an exponent
    let split = (1..bytes.len()).rev().find(|&k| {
        (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E' | b'+' | b'-')
    })?;
    let re = R::parse_text(&body[..split])?;
    let im = R::parse_text(&body[split + 1..])?;
    let im = if bytes[split] == b'-' { -im } else { im };
    Some(Complex::new(re, im))
}

pub fn scalar_to_json<R: Real>(z: &Complex<R>) -> Value {
    Value::Array(vec![z.re.to_json(), z.im.to_json()])
}

pub fn scalar_from_json<R: Real>(v: &Value) -> Option<Complex<R>> {
    match v {
        Value::Array(parts) if parts.len() == 2 => {
            Some(Complex::new(R::from_json(&parts[0])?, R::from_json(&parts[1])?))
        }
        Value::String(s) => scalar_from_text(s),
        other => Some(real(R::from_json(other)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_exact() {
        let z = Complex::new(rational(-3, 4), rational(5, 6));
        let s = scalar_to_text(&z);
        assert_eq!(s, "-3/4+5/6*i");
        assert_eq!(scalar_from_text::<BigRational>(&s), Some(z));
        let w = Complex::new(rational(1, 2), rational(-7, 1));
        assert_eq!(scalar_to_text(&w), "1/2-7*i");
        assert_eq!(scalar_from_text::<BigRational>("1/2-7*i"), Some(w));
    }

    #[test]
    fn text_round_trip_float() {
        let z = Complex::new(1.5e-20_f64, -2.25e7);
        let s = scalar_to_text(&z);
        assert_eq!(scalar_from_text::<f64>(&s), Some(z));
        assert_eq!(scalar_from_text::<f64>("-1e-3+-2e+4*i"), Some(Complex::new(-1e-3, -2e4)));
    }

    #[test]
    fn exact_from_float_is_exact() {
        let r = <BigRational as Real>::from_double(0.1).unwrap();
        assert_eq!(r.as_f64(), 0.1);
    }
}
