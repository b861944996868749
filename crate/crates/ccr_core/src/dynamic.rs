//! Mode-tagged elements for callers that decide exact vs float at run time.

use num_rational::BigRational;

use crate::element::AlgebraElement;
use crate::error::AlgebraError;
use crate::scalar::Mode;

#[derive(Clone, Debug, PartialEq)]
pub enum DynElement {
    Exact(AlgebraElement<BigRational>),
    Float(AlgebraElement<f64>),
}

impl DynElement {
    pub fn mode(&self) -> Mode {
        match self {
            DynElement::Exact(_) => Mode::Exact,
            DynElement::Float(_) => Mode::Float,
        }
    }

    pub fn multiply(&self, other: &DynElement) -> Result<DynElement, AlgebraError> {
        match (self, other) {
            (DynElement::Exact(a), DynElement::Exact(b)) => Ok(DynElement::Exact(a.multiply(b))),
            (DynElement::Float(a), DynElement::Float(b)) => Ok(DynElement::Float(a.multiply(b))),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }

    pub fn add(&self, other: &DynElement) -> Result<DynElement, AlgebraError> {
        match (self, other) {
            (DynElement::Exact(a), DynElement::Exact(b)) => Ok(DynElement::Exact(a + b)),
            (DynElement::Float(a), DynElement::Float(b)) => Ok(DynElement::Float(a + b)),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }

    pub fn star(&self) -> DynElement {
        match self {
            DynElement::Exact(a) => DynElement::Exact(a.star()),
            DynElement::Float(a) => DynElement::Float(a.star()),
        }
    }
}
