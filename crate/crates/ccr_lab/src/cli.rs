use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

/// Checks and workflows for the CCR algebra, quasifree states, phase spaces,
/// lattice propagators, Minkowski kernels, Wick calculus and wavefront relations.
///
/// Natural units (c = hbar = 1). Reports go to stdout and, with --out, to files.
/// CCR_LAB_THREADS caps the worker threads.
#[derive(Debug, Parser)]
#[command(name = "ccr-lab", version)]
pub struct Cli {
    /// Seed for every randomized step (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for report files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON run configuration (`{"version": 1, "seed": .., "command": {"kernel": {..}}}`);
    /// replaces the subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Run every acceptance criterion; same as the `selftest` subcommand.
    #[arg(long, conflicts_with = "config")]
    pub selftest: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

pub const CONFIG_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub version: u32,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub out: Option<PathBuf>,
    pub command: Command,
}

#[derive(Debug, Subcommand, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Normal form of an algebra element modulo the commutation relations.
    Algebra(AlgebraArgs),
    /// n-point functions of a quasifree state.
    Npoint(NpointArgs),
    /// Purity and one-particle structure of a phase-space covariance.
    Phase(PhaseArgs),
    /// Lattice Klein-Gordon propagator checks.
    Lattice(LatticeArgs),
    /// Minkowski vacuum two-point function: Bessel vs mode integral, or the Hadamard remainder ladder.
    Kernel(KernelArgs),
    /// Normal ordering against a state kernel, or the vacuum stress-energy report.
    Wick(WickArgs),
    /// Sampled composition of wavefront relations.
    Wf(WfArgs),
    /// Run the acceptance criteria.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraArgs {
    /// Element, e.g. "phi(2)phi(1) + (1/2+0*i)*phi(1)".
    #[arg(long)]
    pub expr: String,
    /// Pairing form JSON `{"n": n, "E": [[E12, E13, ..], [E23, ..], ..]}`.
    #[arg(long, conflicts_with = "symplectic")]
    #[serde(default)]
    pub pairing: Option<PathBuf>,
    /// Use the standard symplectic form on this many pairs instead.
    #[arg(long)]
    #[serde(default)]
    pub symplectic: Option<usize>,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NpointArgs {
    /// Two-point kernel JSON `{"n": n, "omega": [[..], ..]}`.
    #[arg(long)]
    pub kernel: PathBuf,
    /// Index lists such as "1,2,3,4"; one row per list.
    #[arg(long = "indices", required = true)]
    pub indices: Vec<String>,
    /// Exact rational arithmetic (entries given as "p/q" strings).
    #[arg(long)]
    #[serde(default)]
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum PhaseCheck {
    Purity,
    OneParticle,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseArgs {
    /// Symmetric covariance, JSON array of rows.
    #[arg(long)]
    pub mu: PathBuf,
    /// Antisymmetric form, JSON array of rows.
    #[arg(long)]
    pub tau: PathBuf,
    #[arg(long, value_enum, default_value = "purity")]
    #[serde(default = "defaults::phase_check")]
    pub check: PhaseCheck,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeCheck {
    /// Volume vs surface pairing and spacelike zeros.
    Pairing,
    /// |E(P g)| / |g| for a bump g.
    Kernel,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeArgs {
    /// Lattice configuration JSON; when given, the grid flags below are ignored.
    #[arg(long)]
    #[serde(default)]
    pub lattice: Option<PathBuf>,
    #[arg(long, default_value_t = 401)]
    #[serde(default = "defaults::n_x")]
    pub n_x: usize,
    #[arg(long, default_value_t = 0.02)]
    #[serde(default = "defaults::a")]
    pub a: f64,
    #[arg(long, default_value_t = 0.01)]
    #[serde(default = "defaults::dt")]
    pub dt: f64,
    #[arg(long, default_value_t = 150)]
    #[serde(default = "defaults::t_steps")]
    pub t_steps: usize,
    #[arg(long, default_value_t = 1.0)]
    #[serde(default = "defaults::one")]
    pub m: f64,
    #[arg(long, value_enum, default_value = "pairing")]
    #[serde(default = "defaults::lattice_check")]
    pub check: LatticeCheck,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum KernelGrid {
    /// 50 spacelike and 50 timelike points off the light cone.
    Default,
    /// Radial ladder r = 2^-j on [1e-3, 1]/m for the Hadamard remainder.
    Ladder,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelArgs {
    #[arg(long, default_value_t = 1.0)]
    #[serde(default = "defaults::one")]
    pub m: f64,
    #[arg(long, value_enum, default_value = "default")]
    #[serde(default = "defaults::kernel_grid")]
    pub grid: KernelGrid,
    /// Hadamard scale; defaults to 1/m.
    #[arg(long)]
    #[serde(default)]
    pub lambda: Option<f64>,
    /// Hadamard order N.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "defaults::order")]
    pub order: usize,
    /// Agreement tolerance (relative) for the default grid.
    #[arg(long, default_value_t = 1e-6)]
    #[serde(default = "defaults::kernel_tol")]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum WickMode {
    Order,
    Stress,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WickArgs {
    #[arg(long, value_enum, default_value = "order")]
    #[serde(default = "defaults::wick_mode")]
    pub mode: WickMode,
    /// Element to normal order (mode order).
    #[arg(long)]
    #[serde(default)]
    pub expr: Option<String>,
    /// Two-point kernel JSON used as the ordering kernel (mode order).
    #[arg(long)]
    #[serde(default)]
    pub kernel: Option<PathBuf>,
    /// Mass for the stress-energy of the Minkowski vacuum remainder (mode stress).
    #[arg(long, default_value_t = 1.0)]
    #[serde(default = "defaults::one")]
    pub m: f64,
    /// Curvature coupling xi (mode stress).
    #[arg(long, default_value_t = 0.0)]
    #[serde(default)]
    pub xi: f64,
    /// Evaluation points along x^0 (mode stress).
    #[arg(long, default_value_t = 5)]
    #[serde(default = "defaults::points")]
    pub points: usize,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WfArgs {
    /// Left relation samples (CSV, primed convention).
    #[arg(long, requires = "b")]
    #[serde(default)]
    pub a: Option<PathBuf>,
    /// Right relation samples (CSV, primed convention).
    #[arg(long, requires = "a")]
    #[serde(default)]
    pub b: Option<PathBuf>,
    /// Relation the composites must lie in: hadamard, f-plus, f-minus, delta.
    #[arg(long, default_value = "hadamard")]
    #[serde(default = "defaults::target")]
    pub target: String,
    /// Without sample files: random H o F+ batch with this many shared middle legs.
    #[arg(long, default_value_t = 100)]
    #[serde(default = "defaults::legs")]
    pub legs: usize,
    #[arg(long, default_value_t = 10)]
    #[serde(default = "defaults::per_leg")]
    pub per_leg: usize,
}

#[derive(Debug, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestArgs {
    /// Criteria to run (1-12); all when omitted.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub only: Vec<usize>,
}

mod defaults {
    use super::{KernelGrid, LatticeCheck, PhaseCheck, WickMode};

    pub fn n_x() -> usize {
        401
    }
    pub fn a() -> f64 {
        0.02
    }
    pub fn dt() -> f64 {
        0.01
    }
    pub fn t_steps() -> usize {
        150
    }
    pub fn one() -> f64 {
        1.0
    }
    pub fn order() -> usize {
        3
    }
    pub fn kernel_tol() -> f64 {
        1e-6
    }
    pub fn points() -> usize {
        5
    }
    pub fn legs() -> usize {
        100
    }
    pub fn per_leg() -> usize {
        10
    }
    pub fn target() -> String {
        "hadamard".into()
    }
    pub fn phase_check() -> PhaseCheck {
        PhaseCheck::Purity
    }
    pub fn lattice_check() -> LatticeCheck {
        LatticeCheck::Pairing
    }
    pub fn kernel_grid() -> KernelGrid {
        KernelGrid::Default
    }
    pub fn wick_mode() -> WickMode {
        WickMode::Order
    }
}
