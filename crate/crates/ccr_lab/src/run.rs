use std::path::Path;

use ccr_core::{normal_form, parse_element, to_text, BigRational, GeneratorIndex, PairingForm, Real};
use lattice_propagator::{apply_kg, bump, causal_e, pair_e, Boundary, LatticeConfig, LatticeError, LatticeField, Method};
use microlocal_flat::sample::composable_batch;
use microlocal_flat::{compose_check, samples_from_csv, Relation, DEFAULT_TOL};
use minkowski_kernel::{
    ladder_growth, omega2_bessel, omega2_fourier, remainder_ladder, validation_grid, KernelError, KernelParams,
};
use phase_space::{matrix_from_json, one_particle, purity, PhaseSpaceError};
use quasifree::export::npoint_csv;
use quasifree::{npoint, QuasifreeState, TwoPointKernel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use wick_hadamard::{divergence, normal_order, stress_energy, MinkowskiRemainder, OrderingKernel, StressConfig};

use crate::checks;
use crate::cli::{Command, KernelGrid, LatticeCheck, PhaseCheck, WickMode};

/// Why a run did not succeed; maps to the process exit status.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    /// Bad configuration or input (exit 2).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A numerical check did not pass (exit 3).
    #[error("check failed: {0}")]
    Numeric(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }
}

/// Report files in write order: `(file name, contents)`. The first one is
/// also printed.
pub struct Report {
    pub files: Vec<(String, String)>,
    /// Set when the run completed but a check inside it failed.
    pub failure: Option<String>,
}

impl Report {
    fn ok(files: Vec<(String, String)>) -> Self {
        Report { files, failure: None }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable report") + "\n"
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn kernel_failure(e: KernelError) -> Failure {
    match e {
        KernelError::InvalidInput { .. } | KernelError::OrderGuard { .. } => Failure::Invalid(e.to_string()),
        other => Failure::Numeric(other.to_string()),
    }
}

fn lattice_failure(e: LatticeError) -> Failure {
    match e {
        LatticeError::CausalContamination(_) => Failure::Numeric(e.to_string()),
        other => Failure::Invalid(other.to_string()),
    }
}

fn phase_failure(e: PhaseSpaceError) -> Failure {
    match e {
        PhaseSpaceError::InternalInconsistency(_) => Failure::Numeric(e.to_string()),
        other => Failure::Invalid(other.to_string()),
    }
}

/// Violations listed in the wf report; the count is always complete.
const MAX_LISTED: usize = 20;

pub fn execute(command: &Command, seed: u64) -> Result<Report, Failure> {
    match command {
        Command::Algebra(a) => {
            let expr = parse_element::<BigRational>(&a.expr).map_err(invalid)?;
            let e = match (&a.pairing, a.symplectic) {
                (Some(p), _) => PairingForm::from_json(&read_json(p)?).map_err(invalid)?,
                (None, Some(pairs)) => PairingForm::standard_symplectic(pairs),
                (None, None) => return Err(Failure::Invalid("algebra: give `pairing` or `symplectic`".into())),
            };
            if expr.max_generator() as usize > e.dim() {
                return Err(Failure::Invalid(format!(
                    "algebra: `expr` uses phi({}) but the pairing form has {} generators",
                    expr.max_generator(),
                    e.dim()
                )));
            }
            let nf = normal_form(&expr, &e);
            let report = json!({ "input": to_text(&expr), "normal_form": to_text(&nf), "degree": nf.degree() });
            Ok(Report::ok(vec![("algebra.json".into(), pretty(&report))]))
        }
        Command::Npoint(a) => {
            let v = read_json(&a.kernel)?;
            let mut lists = Vec::new();
            for s in &a.indices {
                let idx: Result<Vec<GeneratorIndex>, _> =
                    s.split([',', ' ']).filter(|t| !t.is_empty()).map(str::parse).collect();
                lists.push(idx.map_err(|e| Failure::Invalid(format!("npoint: `indices` entry {s:?}: {e}")))?);
            }
            let csv = if a.exact { npoint_rows::<BigRational>(&v, &lists)? } else { npoint_rows::<f64>(&v, &lists)? };
            Ok(Report::ok(vec![("npoint.csv".into(), csv)]))
        }
        Command::Phase(a) => {
            let mu = matrix_from_json(&read_json(&a.mu)?).map_err(phase_failure)?;
            let tau = matrix_from_json(&read_json(&a.tau)?).map_err(phase_failure)?;
            let report = match a.check {
                PhaseCheck::Purity => serde_json::to_value(purity(&mu, &tau).map_err(phase_failure)?).expect("report"),
                PhaseCheck::OneParticle => {
                    let s = one_particle(&mu, &tau).map_err(phase_failure)?;
                    json!({
                        "hilbert_dim": s.hilbert_dim(),
                        "pure_planes": s.pure_planes,
                        "mixed_planes": s.mixed_planes,
                        "kernel_dims": s.kernel_dims,
                        "reconstruction_residual": s.reconstruction_residual(&mu, &tau),
                    })
                }
            };
            Ok(Report::ok(vec![("phase.json".into(), pretty(&report))]))
        }
        Command::Lattice(a) => {
            let cfg: LatticeConfig = match &a.lattice {
                Some(p) => {
                    let text = read(p)?;
                    let de = &mut serde_json::Deserializer::from_str(&text);
                    serde_path_to_error::deserialize(de)
                        .map_err(|e| Failure::Invalid(format!("{}: key `{}`: {}", p.display(), e.path(), e.inner())))?
                }
                None => LatticeConfig {
                    n_x: a.n_x,
                    a: a.a,
                    dt: a.dt,
                    t_steps: a.t_steps,
                    m: a.m,
                    boundary: Boundary::AbsorbingPad { pad: a.t_steps },
                    x_min: -((a.n_x / 2) as f64) * a.a,
                },
            };
            cfg.validate().map_err(lattice_failure)?;
            lattice_report(&cfg, a.check)
        }
        Command::Kernel(a) => {
            let params = KernelParams {
                m: a.m,
                lambda: a.lambda.unwrap_or(if a.m > 0.0 { 1.0 / a.m } else { 1.0 }),
                order: a.order,
                eps: 0.0,
            };
            params.validate().map_err(kernel_failure)?;
            if !a.m.is_finite() || a.m <= 0.0 {
                return Err(Failure::Invalid("kernel: `m` must be positive".into()));
            }
            match a.grid {
                KernelGrid::Default => kernel_grid_report(&params, a.tol),
                KernelGrid::Ladder => {
                    let ladder = remainder_ladder(&params, 1e-3 / a.m, 1.0 / a.m).map_err(kernel_failure)?;
                    let mut csv = String::from("r,w_re,w_im,dw_re,dw_im,d2w_re,d2w_im\n");
                    for s in &ladder {
                        csv += &format!(
                            "{:?},{:?},{:?},{:?},{:?},{:?},{:?}\n",
                            s.r, s.w.re, s.w.im, s.dw.re, s.dw.im, s.d2w.re, s.d2w.im
                        );
                    }
                    let growth = ladder_growth(&ladder);
                    let passed = growth.iter().all(|g| *g <= 2.0);
                    let summary = json!({ "rungs": ladder.len(), "growth": growth, "limit": 2.0, "passed": passed });
                    Ok(Report {
                        files: vec![("kernel_ladder.csv".into(), csv), ("kernel_summary.json".into(), pretty(&summary))],
                        failure: (!passed).then(|| format!("remainder grows by {growth:?}")),
                    })
                }
            }
        }
        Command::Wick(a) => match a.mode {
            WickMode::Order => {
                let (Some(expr), Some(kernel)) = (&a.expr, &a.kernel) else {
                    return Err(Failure::Invalid("wick: mode `order` needs `expr` and `kernel`".into()));
                };
                let expr = parse_element::<BigRational>(expr).map_err(invalid)?;
                let tp = TwoPointKernel::<BigRational>::from_json(&read_json(kernel)?).map_err(invalid)?;
                let kappa = OrderingKernel::from_two_point(&tp).map_err(invalid)?;
                let no = normal_order(&expr, &kappa).map_err(invalid)?;
                let terms: Vec<Value> = no
                    .terms()
                    .map(|(w, c)| json!({ "word": w, "coeff": ccr_core::scalar::scalar_to_text(c) }))
                    .collect();
                let report = json!({
                    "input": to_text(&expr),
                    "normal_ordered": terms,
                    "expectation": ccr_core::scalar::scalar_to_text(&no.unit_coeff()),
                });
                Ok(Report::ok(vec![("wick.json".into(), pretty(&report))]))
            }
            WickMode::Stress => {
                if !a.m.is_finite() || a.m <= 0.0 || a.points == 0 {
                    return Err(Failure::Invalid("wick: `m` must be positive and `points` at least 1".into()));
                }
                let kernel = MinkowskiRemainder(KernelParams::massive(a.m));
                let cfg = StressConfig { m: a.m, xi: a.xi, ..StressConfig::default() };
                let rows: Vec<Result<String, Failure>> = (0..a.points)
                    .into_par_iter()
                    .map(|i| {
                        let x = [0.25 * i as f64, 0.0, 0.0, 0.0];
                        let s = stress_energy(&kernel, &x, &cfg).map_err(|e| Failure::Numeric(e.to_string()))?;
                        let div = divergence(&kernel, &x, &cfg, 0.1).map_err(|e| Failure::Numeric(e.to_string()))?;
                        let res = div.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                        let cells: Vec<String> = s.t.iter().flatten().map(|v| format!("{v:?}")).collect();
                        Ok(format!("{:?},{:?},{:?},{:?},{},{res:?}\n", x[0], x[1], x[2], x[3], cells.join(",")))
                    })
                    .collect();
                let mut csv = String::from("x0,x1,x2,x3");
                for a in 0..4 {
                    for b in 0..4 {
                        csv += &format!(",T{a}{b}");
                    }
                }
                csv += ",div_residual\n";
                for r in rows {
                    csv += &r?;
                }
                Ok(Report::ok(vec![("stress.csv".into(), csv)]))
            }
        },
        Command::Wf(a) => {
            let target: Relation = a.target.parse().map_err(|e| Failure::Invalid(format!("wf: `target`: {e}")))?;
            let (left, right) = match (&a.a, &a.b) {
                (Some(pa), Some(pb)) => {
                    let load = |p: &Path| -> Result<Vec<_>, Failure> {
                        Ok(samples_from_csv(&read(p)?)
                            .map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())))?
                            .into_iter()
                            .map(|(p, _)| p)
                            .collect())
                    };
                    (load(pa)?, load(pb)?)
                }
                _ => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    composable_batch(&mut rng, a.legs, a.per_leg, Relation::FPlus)
                }
            };
            let report = compose_check(&left, &right, target, DEFAULT_TOL);
            let failure = if report.passed() {
                None
            } else if let Some(w) = &report.warning {
                Some(w.clone())
            } else {
                Some(format!("{} of {} composites outside the target", report.violations.len(), report.composites))
            };
            let summary = json!({
                "target": report.target,
                "pairs_examined": report.pairs_examined,
                "composites": report.composites,
                "violation_count": report.violations.len(),
                "violations": &report.violations[..report.violations.len().min(MAX_LISTED)],
                "warning": report.warning,
                "passed": report.passed(),
            });
            Ok(Report { files: vec![("wf.json".into(), pretty(&summary))], failure })
        }
        Command::Selftest(a) => {
            let ids: Vec<usize> = if a.only.is_empty() { (1..=12).collect() } else { a.only.clone() };
            if let Some(bad) = ids.iter().find(|i| !(1..=12).contains(*i)) {
                return Err(Failure::Invalid(format!("selftest: `only` entry {bad} outside 1..=12")));
            }
            let results: Vec<_> = ids.iter().map(|&id| checks::run_check(id, seed)).collect();
            let mut lines = String::new();
            for r in &results {
                lines += &r.line();
                lines.push('\n');
            }
            let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
            // timings vary between runs, so the JSON omits them
            let json_rows: Vec<Value> = results
                .iter()
                .map(|r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }))
                .collect();
            Ok(Report {
                files: vec![("selftest.txt".into(), lines), ("selftest.json".into(), pretty(&json_rows))],
                failure: (!failed.is_empty()).then(|| format!("criteria {failed:?} failed")),
            })
        }
    }
}

fn npoint_rows<R: Real>(v: &Value, lists: &[Vec<GeneratorIndex>]) -> Result<String, Failure> {
    let k = TwoPointKernel::<R>::from_json(v).map_err(invalid)?;
    let state = QuasifreeState::new(k).map_err(invalid)?;
    let mut rows = Vec::new();
    for idx in lists {
        rows.push((idx.clone(), npoint(&state, idx).map_err(invalid)?));
    }
    Ok(npoint_csv(&rows))
}

fn lattice_report(cfg: &LatticeConfig, check: LatticeCheck) -> Result<Report, Failure> {
    let t_end = cfg.t(cfg.t_steps);
    let x_mid = cfg.x(cfg.n_x / 2);
    let report = match check {
        LatticeCheck::Pairing => {
            let f = LatticeField::sample(cfg, bump(0.3 * t_end, x_mid - 0.2, 0.15 * t_end, 0.3, 1.0));
            let g = LatticeField::sample(cfg, bump(0.6 * t_end, x_mid + 0.15, 0.15 * t_end, 0.3, 1.0));
            let vol = pair_e(cfg, &f, &g, Method::Volume).map_err(lattice_failure)?;
            let sur = pair_e(cfg, &f, &g, Method::Surface { slice: 3 }).map_err(lattice_failure)?;
            json!({ "volume": vol, "surface": sur, "difference": (vol - sur).abs() })
        }
        LatticeCheck::Kernel => {
            let g = LatticeField::sample(cfg, bump(0.5 * t_end, x_mid, 0.25 * t_end, 0.5, 1.0));
            let epg = causal_e(cfg, &apply_kg(cfg, &g).map_err(lattice_failure)?).map_err(lattice_failure)?;
            let ratio = epg.norm(cfg) / g.norm(cfg);
            json!({ "ratio": ratio, "limit": 1e-8, "passed": ratio <= 1e-8 })
        }
    };
    let failure = match check {
        LatticeCheck::Pairing => {
            let d = report["difference"].as_f64().unwrap_or(f64::INFINITY);
            let v = report["volume"].as_f64().unwrap_or(0.0).abs();
            (d > 1e-10 * v.max(1e-300)).then(|| format!("volume and surface forms differ by {d:e}"))
        }
        LatticeCheck::Kernel => (!report["passed"].as_bool().unwrap_or(false)).then(|| "|E(Pg)|/|g| above 1e-8".into()),
    };
    let summary = json!({ "config": cfg, "check": format!("{check:?}").to_lowercase(), "result": report });
    Ok(Report { files: vec![("lattice.json".into(), pretty(&summary))], failure })
}

fn kernel_grid_report(params: &KernelParams, tol: f64) -> Result<Report, Failure> {
    let grid = validation_grid();
    let rows: Vec<Result<(f64, f64, num_complex::Complex64, f64), KernelError>> = grid
        .par_iter()
        .map(|p| {
            let b = omega2_bessel(p, params)?;
            let f = omega2_fourier(p, params)?;
            Ok((p.dt, p.r, b, (b - f).norm() / b.norm()))
        })
        .collect();
    let mut csv = String::from("dt,r,re,im,abs,rel_diff\n");
    let mut worst = 0.0f64;
    for row in rows {
        let (dt, r, w, rel) = row.map_err(kernel_failure)?;
        worst = worst.max(rel);
        csv += &format!("{dt:?},{r:?},{:?},{:?},{:?},{rel:?}\n", w.re, w.im, w.norm());
    }
    let passed = worst <= tol;
    let summary = json!({
        "points": grid.len(),
        "m": params.m,
        "worst_relative_difference": worst,
        "tolerance": tol,
        "passed": passed,
    });
    Ok(Report {
        files: vec![("kernel.csv".into(), csv), ("kernel_summary.json".into(), pretty(&summary))],
        failure: (!passed).then(|| format!("Bessel and mode-integral forms differ by {worst:e} > {tol:e}")),
    })
}
