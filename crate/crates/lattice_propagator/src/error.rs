use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("invalid parameter `{key}`: {reason}")]
    InvalidParameter { key: &'static str, reason: String },
    #[error("CFL rule violated: dt = {dt} > a = {a}")]
    Cfl { dt: f64, a: f64 },
    #[error("leapfrog unstable: dt^2 (4/a^2 + m^2) = {value} > 4")]
    MassUnstable { value: f64 },
    #[error("absorbing pad of {pad} cells is narrower than the {needed} time steps")]
    PadTooNarrow { pad: usize, needed: usize },
    #[error("causal contamination: {0}")]
    CausalContamination(String),
    #[error("invalid slice {slice}: {reason}")]
    InvalidSlice { slice: usize, reason: String },
    #[error("window too thin: {width} steps, need at least 4")]
    WindowTooThin { width: usize },
    #[error("shape mismatch: field is {got_t}x{got_x}, grid is {want_t}x{want_x}")]
    Shape { got_t: usize, got_x: usize, want_t: usize, want_x: usize },
    #[error("field decode: {0}")]
    Decode(String),
}
