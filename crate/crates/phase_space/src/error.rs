use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhaseSpaceError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("mu is not symmetric (defect {defect:e})")]
    NotSymmetric { defect: f64 },
    #[error("tau is not antisymmetric (defect {defect:e})")]
    NotAntisymmetric { defect: f64 },
    #[error("mu is not positive definite")]
    NotPositive,
    #[error("invalid covariance: |J|_mu = {norm} exceeds 1")]
    InvalidCovariance { norm: f64 },
    #[error("spectrum not gapped: smallest frequency {min_frequency:e}")]
    SpectrumNotGapped { min_frequency: f64 },
    #[error("truncation insufficient: need cutoff {needed}, have {cutoff}")]
    TruncationInsufficient { needed: usize, cutoff: usize },
    #[error("Fock guard: {0}")]
    FockGuard(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
