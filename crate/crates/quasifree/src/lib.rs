//! Quasifree states: n-point functions as pairing sums of a two-point
//! kernel, evaluation on algebra elements, and Gram-matrix positivity checks
//! on finite families.

pub mod error;
pub mod export;
pub mod kernel;
pub mod pairings;
pub mod state;

pub use error::QuasifreeError;
pub use kernel::TwoPointKernel;
pub use pairings::{double_factorial, enumerate_pairings, enumerate_pairings_with, Limits, Pairing};
pub use state::{evaluate, gram_positivity, npoint, npoint_by_enumeration, GramReport, QuasifreeState};

pub type ExactState = QuasifreeState<ccr_core::BigRational>;
pub type FloatState = QuasifreeState<f64>;
