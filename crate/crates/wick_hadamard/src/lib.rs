//! Wick calculus over a reference kernel: normal ordering, Wick products, the
//! change-of-ordering isomorphism on symmetric tensors, coincidence limits of
//! Hadamard-subtracted two-point functions and point-split stress-energy.
//!
//! The algebraic part is generic over [`ccr_core::Real`]; stress-energy is f64.

pub mod coincidence;
pub mod error;
pub mod normal;
pub mod ordering;
pub mod stress;
pub mod tensor;

pub use coincidence::phi2_h_expectation;
pub use error::WickError;
pub use normal::{
    field, normal_order, wick_commutator, wick_expand, wick_expand_word, wick_product, NormalOrdered, MAX_PRODUCT_DEGREE, MAX_WICK_DEGREE};
pub use ordering::{DifferenceKernel, KernelTag, OrderingKernel};
pub use stress::{
    divergence, stress_energy, trace, ConstantKernel, Event, MinkowskiRemainder, SplitKernel, StressConfig, StressTensor,
    Tensor2, TranslationInvariant, METRIC,
};
pub use tensor::{alpha_coefficient, alpha_map, WickPolynomial, WickTensor, MAX_ALPHA_DEGREE, MAX_BASIS};

pub type ExactOrdering = OrderingKernel<ccr_core::BigRational>;
pub type ExactNormalOrdered = NormalOrdered<ccr_core::BigRational>;
pub type ExactTensor = WickTensor<ccr_core::BigRational>;
pub type ExactDifference = DifferenceKernel<ccr_core::BigRational>;
