//! Klein-Gordon `(D_tt - D_xx + m^2) u = f` on a 1+1 dimensional lattice:
//! leapfrog retarded and advanced solutions, the causal propagator
//! `E = advanced - retarded`, its bilinear pairing in volume and Wronskian
//! form, and compression of solutions to sources in a thin time window.

pub mod config;
pub mod error;
pub mod field;
pub mod modes;
pub mod pairing;
pub mod slice;
pub mod solver;

pub use config::{Boundary, LatticeConfig};
pub use error::LatticeError;
pub use field::{bump, LatticeField, Support};
pub use modes::{lattice_omega, leapfrog_phase, mode_two_point, ring_momenta};
pub use pairing::{pair_e, richardson_extrapolate, richardson_order, wronskian, Method};
pub use slice::{chi, slice_compress, solution_from_cauchy, CauchyData, SliceCompression};
pub use solver::{apply_kg, causal_e, check_support, evolve_homogeneous, fundamental, Which};
