//! Building blocks for the radial mode integrals: Gauss-Legendre panels,
//! Wynn's epsilon algorithm and polynomial extrapolation to zero.

use num_complex::Complex64;
use std::sync::OnceLock;

pub const GL_POINTS: usize = 16;

/// Nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GL_POINTS))
}

/// Composite Gauss-Legendre over `[a, b]` with sub-panels no longer than `h_max`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, h_max: f64) -> Complex64 {
    let (nodes, weights) = rule();
    let pieces = ((b - a) / h_max).ceil().max(1.0) as usize;
    let h = (b - a) / pieces as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for p in 0..pieces {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in nodes.iter().zip(weights) {
            acc += f(mid + 0.5 * h * x) * *w;
        }
        total += acc * (0.5 * h);
    }
    total
}

/// Wynn's epsilon algorithm on a stream of partial sums, one counter-diagonal
/// kept in memory.
#[derive(Clone, Debug, Default)]
pub struct Wynn {
    diag: Vec<Complex64>,
}

impl Wynn {
    pub fn new() -> Self {
        Wynn::default()
    }

    /// Feed the next partial sum and return the current best estimate.
    pub fn push(&mut self, s: Complex64) -> Complex64 {
        let n = self.diag.len();
        self.diag.push(s);
        if n == 0 {
            return s;
        }
        let mut aux2 = Complex64::new(0.0, 0.0);
        for j in (1..=n).rev() {
            let aux1 = aux2;
            aux2 = self.diag[j - 1];
            let diff = self.diag[j] - aux2;
            self.diag[j - 1] = if diff.norm() < 1e-300 { Complex64::new(1e300, 0.0) } else { aux1 + diff.inv() };
        }
        if n % 2 == 0 {
            self.diag[0]
        } else {
            self.diag[1]
        }
    }
}

/// Value at `x = 0` of the interpolating polynomial through `(xs, ys)` (Neville).
pub fn extrapolate_to_zero(xs: &[f64], ys: &[Complex64]) -> Complex64 {
    let mut t = ys.to_vec();
    let n = xs.len();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xj) = (xs[i], xs[i + level]);
            t[i] = (t[i] * xj - t[i + 1] * xi) / (xj - xi);
        }
    }
    t[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let v = integrate(&|x: f64| Complex64::new(x.powi(31), x.powi(6)), 0.0, 1.0, 1.0);
        assert!((v.re - 1.0 / 32.0).abs() < 1e-15 && (v.im - 1.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn wynn_accelerates_alternating_series() {
        // ln 2 = 1 - 1/2 + 1/3 - ...
        let mut w = Wynn::new();
        let mut s = 0.0;
        let mut est = Complex64::new(0.0, 0.0);
        for k in 1..=20 {
            s += if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
            est = w.push(Complex64::new(s, 0.0));
        }
        assert!((est.re - 2f64.ln()).abs() < 1e-12, "{est}");
    }

    #[test]
    fn neville_recovers_polynomial() {
        let xs = [0.4, 0.2, 0.1, 0.05];
        let ys: Vec<Complex64> = xs.iter().map(|x| Complex64::new(2.0 - x + 3.0 * x * x * x, *x)).collect();
        assert!((extrapolate_to_zero(&xs, &ys) - Complex64::new(2.0, 0.0)).norm() < 1e-13);
    }
}
