//! Finite-mode phase spaces `(R^{2N}, tau, mu)`: the operator `J`, one-particle
//! structures, purity, stationary ground states of quadratic Hamiltonians,
//! truncated Fock representations and the Hilbert-Schmidt equivalence probe.
//!
//! Coordinates are `(q_1..q_N, p_1..p_N)` throughout; see [`forms::ModePhaseSpace`].

pub mod equivalence;
pub mod error;
pub mod fock;
pub mod forms;
pub mod ground;
pub mod one_particle;
pub mod purity;

pub use equivalence::{equivalence_probe, hs_norm_sq, relative_spectrum, EquivalenceReport, LadderRow, Trend, Truncation};
pub use error::PhaseSpaceError;
pub use fock::{fock_represent, FockRepresentation};
pub use forms::{matrix_from_json, matrix_to_json, standard_symplectic, validate_mu_tau, ModePhaseSpace, OperatorJ};
pub use ground::{evolution, ground_state_mu, hamiltonian_generator, mode_frequencies, periodic_lattice_energy};
pub use one_particle::{one_particle, relating_unitary, OneParticleStructure};
pub use purity::{purity, sup_eigenvalues, PurityReport};

pub use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64;
