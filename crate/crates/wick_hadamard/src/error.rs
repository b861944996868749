use minkowski_kernel::KernelError;
use quasifree::QuasifreeError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WickError {
    #[error("ordering kernel invalid at ({i}, {j}): antisymmetric part differs from (i/2) E")]
    OrderingKernelInvalid { i: u32, j: u32 },
    #[error("difference kernel not symmetric at ({i}, {j})")]
    InvalidDifference { i: usize, j: usize },
    #[error("degree {degree} exceeds the guard of {max}")]
    DegreeGuard { degree: usize, max: usize },
    #[error("tensor not symmetric under permutations (defect {defect:e})")]
    NotSymmetric { defect: f64 },
    #[error("shape: {0}")]
    Shape(String),
    #[error("generator {label} outside the kernel's 1..={n}")]
    UnknownGenerator { label: u32, n: usize },
    #[error("point-split stencil unresolved: Richardson defect {defect:e} exceeds {tol:e}")]
    Resolution { defect: f64, tol: f64 },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Quasifree(#[from] QuasifreeError),
}
