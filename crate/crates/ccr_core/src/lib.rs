//! Symbolic CCR *-algebra: free algebra on hermitian generators `phi(f_i)`,
//! ordered normal forms modulo `[phi(f), phi(g)] = i E(f, g) 1`, induced maps
//! and the iterated-commutator simplicity probe.
//!
//! Everything is generic over the real coefficient field ([`Real`]); exact
//! rationals are the default for identities, floats for numeric kernels.

pub mod dynamic;
pub mod element;
pub mod error;
pub mod induced;
pub mod linalg;
pub mod normal;
pub mod pairing;
pub mod scalar;
pub mod simplicity;
pub mod text;

pub use dynamic::DynElement;
pub use element::{multiply, star, AlgebraElement, GeneratorIndex, Monomial, Word};
pub use error::AlgebraError;
pub use induced::{induced_map, InducedMap, Parity};
pub use normal::{commutator, normal_form};
pub use pairing::PairingForm;
pub use scalar::{imag_unit, rational, real, Mode, Real, Scalar};
pub use simplicity::{find_simplicity_witness, simplicity_probe};
pub use text::{parse_element, to_text};

pub use num_complex::Complex;
pub use num_rational::BigRational;

pub type ExactScalar = Scalar<BigRational>;
pub type FloatScalar = Scalar<f64>;
pub type ExactElement = AlgebraElement<BigRational>;
pub type FloatElement = AlgebraElement<f64>;
pub type ExactPairing = PairingForm<BigRational>;
pub type FloatPairing = PairingForm<f64>;
