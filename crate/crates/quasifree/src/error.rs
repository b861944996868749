use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuasifreeError {
    #[error("pairings need an even number of points, got {n}")]
    OddPairing { n: usize },
    #[error("degree guard: {n} exceeds the limit {max}")]
    DegreeGuard { n: usize, max: usize },
    #[error("incomplete kernel: no value for omega({i},{j})")]
    IncompleteKernel { i: u32, j: u32 },
    #[error("kernel inconsistency: {0}")]
    KernelInconsistency(String),
    #[error("Gram degree guard: element {index} has degree {degree} > {max}")]
    GramDegree { index: usize, degree: usize, max: usize },
}
