use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::close;
use crate::relation::{classify_wf_point, Relation, WfPoint};

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub a: usize,
    pub b: usize,
    pub composite: WfPoint,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionReport {
    pub target: Relation,
    pub pairs_examined: usize,
    pub composites: usize,
    pub violations: Vec<Violation>,
    /// Set when nothing was composable; such a run is not a pass.
    pub warning: Option<String>,
}

impl CompositionReport {
    pub fn passed(&self) -> bool {
        self.composites > 0 && self.violations.is_empty()
    }
}

/// Composes every `a in A`, `b in B` whose middle legs agree
/// (`a.y = b.x`, `a.k_y = b.k_x` within `tol`) into `(a.x, b.y, a.k_x, b.k_y)`
/// and checks each composite against `target`.
pub fn compose_check(a: &[WfPoint], b: &[WfPoint], target: Relation, tol: f64) -> CompositionReport {
    let per_a: Vec<(usize, Vec<Violation>)> = a
        .par_iter()
        .enumerate()
        .map(|(ia, pa)| {
            let mut n = 0;
            let mut bad = Vec::new();
            for (ib, pb) in b.iter().enumerate() {
                if !(close(&pa.y, &pb.x, tol) && close(&pa.ky, &pb.kx, tol)) {
                    continue;
                }
                n += 1;
                let composite = WfPoint { x: pa.x, y: pb.y, kx: pa.kx, ky: pb.ky };
                if !classify_wf_point(&composite, target, tol) {
                    bad.push(Violation { a: ia, b: ib, composite });
                }
            }
            (n, bad)
        })
        .collect();
    let composites = per_a.iter().map(|(n, _)| n).sum();
    let violations: Vec<Violation> = per_a.into_iter().flat_map(|(_, v)| v).collect();
    let warning = (composites == 0).then(|| "no composable pairs: result is vacuous".to_string());
    CompositionReport { target, pairs_examined: a.len() * b.len(), composites, violations, warning }
}
