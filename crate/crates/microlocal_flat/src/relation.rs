use serde::{Deserialize, Serialize};

use crate::geometry::{close, future_directed, in_causal_future, in_causal_past, is_null, is_zero, neg, parallel, sharp, sub, Vec4};

pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CotangentPoint {
    pub x: Vec4,
    pub k: Vec4,
}

/// A point `(x, y, k_x, k_y)` of a relation in `T*M x T*M`, stored in the
/// primed convention: the sign of `k_y` is already flipped relative to the
/// wavefront set of the kernel, so composing kernels composes these relations
/// directly. Use [`WfPoint::from_unprimed`] for wavefront-set data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WfPoint {
    pub x: Vec4,
    pub y: Vec4,
    pub kx: Vec4,
    pub ky: Vec4,
}

impl WfPoint {
    pub fn primed(x: Vec4, y: Vec4, kx: Vec4, ky: Vec4) -> Self {
        WfPoint { x, y, kx, ky }
    }

    /// From a wavefront-set point `(x, k_x; y, k_y)` of a kernel.
    pub fn from_unprimed(x: Vec4, y: Vec4, kx: Vec4, ky: Vec4) -> Self {
        WfPoint { x, y, kx, ky: neg(&ky) }
    }

    /// Back to `(x, y, k_x, k_y)` in wavefront-set signs.
    pub fn to_unprimed(&self) -> (Vec4, Vec4, Vec4, Vec4) {
        (self.x, self.y, self.kx, neg(&self.ky))
    }

    pub fn left(&self) -> CotangentPoint {
        CotangentPoint { x: self.x, k: self.kx }
    }

    pub fn right(&self) -> CotangentPoint {
        CotangentPoint { x: self.y, k: self.ky }
    }

    pub fn scaled(&self, s: f64) -> Self {
        WfPoint { kx: self.kx.map(|v| v * s), ky: self.ky.map(|v| v * s), ..*self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// Hadamard form: geodesically related with `k_x` future-directed.
    Hadamard,
    /// Retarded fundamental solution: diagonal, or related with `x in J^+(y)`.
    FPlus,
    /// Advanced fundamental solution: diagonal, or related with `x in J^-(y)`.
    FMinus,
    /// Diagonal `x = y`, `k_y = k_x != 0` (primed).
    Delta,
}

impl std::str::FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hadamard" | "H" => Ok(Relation::Hadamard),
            "f-plus" | "F+" => Ok(Relation::FPlus),
            "f-minus" | "F-" => Ok(Relation::FMinus),
            "delta" => Ok(Relation::Delta),
            other => Err(format!("unknown relation {other:?}")),
        }
    }
}

/// `(x, k_x) ~ (y, k_y)`: `k_x` null, `k_y = k_x` (flat parallel transport)
/// and `y - x` along `k_x^sharp`. Coincident points are related through a
/// zero-length geodesic.
pub fn geodesic_related(p: &WfPoint, tol: f64) -> bool {
    is_null(&p.kx, tol) && close(&p.kx, &p.ky, tol) && parallel(&sub(&p.y, &p.x), &sharp(&p.kx), tol)
}

fn on_diagonal(p: &WfPoint, tol: f64) -> bool {
    !is_zero(&p.kx) && close(&p.x, &p.y, tol) && close(&p.kx, &p.ky, tol)
}

pub fn classify_wf_point(p: &WfPoint, which: Relation, tol: f64) -> bool {
    match which {
        Relation::Hadamard => geodesic_related(p, tol) && future_directed(&p.kx),
        Relation::FPlus => on_diagonal(p, tol) || (geodesic_related(p, tol) && in_causal_future(&p.x, &p.y, tol)),
        Relation::FMinus => on_diagonal(p, tol) || (geodesic_related(p, tol) && in_causal_past(&p.x, &p.y, tol)),
        Relation::Delta => on_diagonal(p, tol),
    }
}
