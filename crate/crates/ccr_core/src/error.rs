use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("scalar mode mismatch: cannot combine exact and float elements")]
    ModeMismatch,
    #[error("invalid symmetry: sigma neither preserves nor reverses E (residual {residual})")]
    InvalidSymmetry { residual: f64 },
    #[error("symmetry matrix must be {expected}x{expected}")]
    SymmetryShape { expected: usize },
    #[error("symmetry matrix is singular")]
    SingularSymmetry,
    #[error("arity mismatch: element has top degree {degree} but {probes} probes were given")]
    Arity { degree: usize, probes: usize },
    #[error("probe vector has length {got}, expected {expected}")]
    ProbeLength { expected: usize, got: usize },
    #[error("pairing form: E({i},{i}) must vanish")]
    DiagonalPairing { i: u32 },
    #[error("generator index {index} outside 1..={n}")]
    IndexOutOfRange { index: u32, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
