//! Minkowski geometry in signature `(+,-,-,-)`.

pub type Vec4 = [f64; 4];

pub const METRIC: Vec4 = [1.0, -1.0, -1.0, -1.0];

pub fn eta(a: &Vec4, b: &Vec4) -> f64 {
    (0..4).map(|i| METRIC[i] * a[i] * b[i]).sum()
}

/// Euclidean norm of the components, the scale for all tolerances.
pub fn norm(a: &Vec4) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub fn sub(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn add(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn scale(a: &Vec4, s: f64) -> Vec4 {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

pub fn neg(a: &Vec4) -> Vec4 {
    scale(a, -1.0)
}

/// `k^sharp`, the vector metrically dual to the covector `k`.
pub fn sharp(k: &Vec4) -> Vec4 {
    [k[0], -k[1], -k[2], -k[3]]
}

pub fn is_zero(a: &Vec4) -> bool {
    a.iter().all(|v| *v == 0.0)
}

pub fn is_null(k: &Vec4, tol: f64) -> bool {
    !is_zero(k) && eta(k, k).abs() <= tol * norm(k).powi(2)
}

/// `a` and `b` are parallel: the wedge `a^b` vanishes relative to `|a||b|`.
/// The zero vector is parallel to everything.
pub fn parallel(a: &Vec4, b: &Vec4, tol: f64) -> bool {
    let mut wedge = 0.0f64;
    for i in 0..4 {
        for j in i + 1..4 {
            wedge = wedge.max((a[i] * b[j] - a[j] * b[i]).abs());
        }
    }
    wedge <= tol * norm(a) * norm(b)
}

pub fn close(a: &Vec4, b: &Vec4, tol: f64) -> bool {
    norm(&sub(a, b)) <= tol * norm(a).max(norm(b)).max(1.0)
}

/// `x in J^+(y)`: `x - y` is zero or causal and future-pointing.
pub fn in_causal_future(x: &Vec4, y: &Vec4, tol: f64) -> bool {
    let v = sub(x, y);
    let n = norm(&v);
    n <= tol || (eta(&v, &v) >= -tol * n * n && v[0] > 0.0)
}

pub fn in_causal_past(x: &Vec4, y: &Vec4, tol: f64) -> bool {
    in_causal_future(y, x, tol)
}

/// Future-directed covector: for causal `k` this is `k_0 > 0`.
pub fn future_directed(k: &Vec4) -> bool {
    k[0] > 0.0
}
