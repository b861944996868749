use crate::kernel::SeparationPoint;

/// Fifty spacelike and fifty timelike separations, all at least `0.08` from the
/// light cone in `| |dt| - r |`.
pub fn validation_grid() -> Vec<SeparationPoint> {
    let mut pts = Vec::with_capacity(100);
    for i in 0..10 {
        let r = 0.2 + 0.3 * i as f64;
        for frac in [0.0, 0.3, -0.3, 0.6, -0.6] {
            pts.push(SeparationPoint { dt: frac * r, r });
        }
    }
    for r in [0.1, 0.5, 1.0, 2.0, 3.0] {
        for gap in [0.2, 0.7, 1.5, 2.5, 4.0] {
            pts.push(SeparationPoint { dt: r + gap, r });
            pts.push(SeparationPoint { dt: -(r + gap), r });
        }
    }
    pts
}

/// Spacelike radial ladder `r_j = r_max 2^{-j}` down to `r_min` at `dt = 0`.
pub fn radial_ladder(r_min: f64, r_max: f64) -> Vec<SeparationPoint> {
    let mut out = Vec::new();
    let mut r = r_max;
    while r >= r_min * (1.0 - 1e-12) {
        out.push(SeparationPoint { dt: 0.0, r });
        r /= 2.0;
    }
    out
}
