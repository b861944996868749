use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KernelError {
    #[error("point (dt = {dt}, r = {r}) is on the light cone; the kernel is only defined distributionally there")]
    OnLightconeSingular { dt: f64, r: f64 },
    #[error("quadrature did not converge after {panels} panels (residual estimate {residual:e})")]
    QuadratureFailure { residual: f64, panels: usize },
    #[error("parametrix order {order} exceeds the guard of 8")]
    OrderGuard { order: usize },
    #[error("momentum profile tail carries {tail_fraction:e} of the norm (limit 1e-8)")]
    TailTruncation { tail_fraction: f64 },
    #[error("invalid input `{key}`: {reason}")]
    InvalidInput { key: &'static str, reason: String },
}
