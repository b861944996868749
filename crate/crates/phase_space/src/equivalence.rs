use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::PhaseSpaceError;
use crate::forms::{check_symmetric, cholesky, validate_mu_tau};

/// Log-log slope of `|Q|_HS` against `N` at or above which growth is called divergent.
pub const DIVERGENT_SLOPE: f64 = 0.4;
/// Slope at or below which the trend is called bounded.
pub const BOUNDED_SLOPE: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    BoundedTrend,
    DivergentTrend,
    Inconclusive,
}

/// One rung of the truncation ladder: `N` modes with both covariances and `tau`.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub modes: usize,
    pub mu1: DMatrix<f64>,
    pub mu2: DMatrix<f64>,
    pub tau: DMatrix<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderRow {
    pub modes: usize,
    pub c_min: f64,
    pub c_max: f64,
    pub hs_norm: f64,
    pub hs_norm_sq: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub c_min: f64,
    pub c_max: f64,
    pub hs_norms: Vec<f64>,
    pub rows: Vec<LadderRow>,
    pub slope: Option<f64>,
    pub verdict: Trend,
}

/// Generalized eigenvalues of `mu2 v = c mu1 v`, ascending. These are the
/// eigenvalues of `1 + Q` with `mu1(x, Q y) = mu2(x, y) - mu1(x, y)`.
pub fn relative_spectrum(mu1: &DMatrix<f64>, mu2: &DMatrix<f64>) -> Result<Vec<f64>, PhaseSpaceError> {
    check_symmetric(mu1)?;
    check_symmetric(mu2)?;
    let l = cholesky(mu1)?;
    let l_inv = l.try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let b = &l_inv * mu2 * l_inv.transpose();
    let mut ev: Vec<f64> = SymmetricEigen::new((&b + b.transpose()) * 0.5).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// `|Q|_HS^2` as the Frobenius norm of `L^{-1} (mu2 - mu1) L^{-T}`.
pub fn hs_norm_sq(mu1: &DMatrix<f64>, mu2: &DMatrix<f64>) -> Result<f64, PhaseSpaceError> {
    let l_inv = cholesky(mu1)?.try_inverse().ok_or(PhaseSpaceError::NotPositive)?;
    let q = &l_inv * (mu2 - mu1) * l_inv.transpose();
    Ok(q.iter().map(|x| x * x).sum())
}

fn slope(rows: &[LadderRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.hs_norm > 0.0)
        .map(|r| ((r.modes as f64).ln(), r.hs_norm.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / sxx)
}

pub fn equivalence_probe(ladder: &[Truncation]) -> Result<EquivalenceReport, PhaseSpaceError> {
    let mut rows = Vec::with_capacity(ladder.len());
    for t in ladder {
        if t.mu1.nrows() != 2 * t.modes {
            return Err(PhaseSpaceError::Shape(format!("truncation N={} has dimension {}", t.modes, t.mu1.nrows())));
        }
        validate_mu_tau(&t.mu1, &t.tau)?;
        validate_mu_tau(&t.mu2, &t.tau)?;
        let spec = relative_spectrum(&t.mu1, &t.mu2)?;
        let sq = hs_norm_sq(&t.mu1, &t.mu2)?;
        rows.push(LadderRow {
            modes: t.modes,
            c_min: spec.first().copied().unwrap_or(1.0),
            c_max: spec.last().copied().unwrap_or(1.0),
            hs_norm: sq.sqrt(),
            hs_norm_sq: sq,
        });
    }
    let all_zero = !rows.is_empty() && rows.iter().all(|r| r.hs_norm == 0.0);
    let s = slope(&rows);
    let verdict = if rows.len() < 2 {
        Trend::Inconclusive
    } else if all_zero {
        Trend::BoundedTrend
    } else {
        match s {
            Some(s) if s >= DIVERGENT_SLOPE => Trend::DivergentTrend,
            Some(s) if s <= BOUNDED_SLOPE => Trend::BoundedTrend,
            _ => Trend::Inconclusive,
        }
    };
    Ok(EquivalenceReport {
        c_min: rows.iter().map(|r| r.c_min).fold(f64::INFINITY, f64::min),
        c_max: rows.iter().map(|r| r.c_max).fold(f64::NEG_INFINITY, f64::max),
        hs_norms: rows.iter().map(|r| r.hs_norm).collect(),
        rows,
        slope: s,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::standard_symplectic;

    fn ladder(f: impl Fn(usize) -> (DMatrix<f64>, DMatrix<f64>)) -> Vec<Truncation> {
        [1, 2, 4, 8, 16]
            .iter()
            .map(|&n| {
                let (mu1, mu2) = f(n);
                Truncation { modes: n, mu1, mu2, tau: standard_symplectic(n) }
            })
            .collect()
    }

    #[test]
    fn doubled_covariance_diverges() {
        let r = equivalence_probe(&ladder(|n| (DMatrix::identity(2 * n, 2 * n), DMatrix::identity(2 * n, 2 * n) * 2.0)))
            .unwrap();
        for row in &r.rows {
            assert_eq!(row.hs_norm_sq, 2.0 * row.modes as f64);
        }
        assert_eq!(r.verdict, Trend::DivergentTrend);
    }

    #[test]
    fn identical_is_bounded() {
        let r = equivalence_probe(&ladder(|n| (DMatrix::identity(2 * n, 2 * n), DMatrix::identity(2 * n, 2 * n)))).unwrap();
        assert!(r.hs_norms.iter().all(|&h| h == 0.0));
        assert_eq!(r.verdict, Trend::BoundedTrend);
    }
}
