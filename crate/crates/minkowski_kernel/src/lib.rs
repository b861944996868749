//! Vacuum two-point function of the free scalar field of mass `m` on 3+1
//! Minkowski space, as a function of the separation `(dt, r)`, in closed
//! Bessel form and as a radial mode integral. Also the flat Hadamard
//! parametrix, its smooth remainder and the one-particle product on radial
//! momentum profiles.

pub mod bessel;
pub mod error;
pub mod fourier;
pub mod grid;
pub mod kernel;
pub mod profile;
pub mod quadrature;
pub mod remainder;

pub use bessel::{bessel_i1, bessel_k1};
pub use error::KernelError;
pub use grid::{radial_ladder, validation_grid};
pub use fourier::{commutator_fourier, eps_ladder, omega2_fourier, omega2_fourier_at};
pub use kernel::{
    hadamard_coefficients, hadamard_h, lambda_shift, omega2_bessel, remainder_coincidence, remainder_symmetric, remainder_w, sigma_eps,
    KernelParams, SeparationPoint, MAX_ORDER,
};
pub use remainder::{growth_ratio, kernel_ladder, ladder_growth, remainder_ladder, LadderSample};
pub use profile::{mu_minkowski, profile_from_cauchy, tau_minkowski, uncertainty_margin, MomentumProfile};

pub use num_complex::Complex64;
