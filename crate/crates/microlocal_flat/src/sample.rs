//! Random relation points built on explicit null lines, for composition tests.

use rand::Rng;

use crate::geometry::{add, scale, sharp, Vec4};
use crate::relation::{Relation, WfPoint};

pub fn random_event<G: Rng>(rng: &mut G, extent: f64) -> Vec4 {
    [0; 4].map(|_| rng.gen_range(-extent..=extent))
}

/// `lambda (1, n)` with `n` a uniform unit 3-vector and `lambda` in `[0.5, 2]`.
pub fn random_null_future<G: Rng>(rng: &mut G) -> Vec4 {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    let lambda = rng.gen_range(0.5..=2.0);
    [lambda, lambda * s * phi.cos(), lambda * s * phi.sin(), lambda * z]
}

/// A point of the Hadamard relation ending at `(y, k)`: `x = y + s k^sharp`.
/// `k` should be null and future-directed.
pub fn hadamard_ending_at<G: Rng>(rng: &mut G, y: Vec4, k: Vec4) -> WfPoint {
    let s = rng.gen_range(-2.0..=2.0);
    WfPoint::primed(add(&y, &scale(&sharp(&k), s)), y, k, k)
}

/// A point of `F+` or `F-` starting at `(y, k)`; `k` may have either time
/// orientation. One in eight is a diagonal point.
pub fn fundamental_starting_at<G: Rng>(rng: &mut G, y: Vec4, k: Vec4, which: Relation) -> WfPoint {
    if rng.gen_range(0..8) == 0 {
        return WfPoint::primed(y, y, k, k);
    }
    // y - z = s k^sharp must be future (F+) or past (F-) pointing
    let mut s: f64 = rng.gen_range(0.0..=2.0) * k[0].signum();
    if which == Relation::FMinus {
        s = -s;
    }
    WfPoint::primed(y, add(&y, &scale(&sharp(&k), -s)), k, k)
}

/// `legs` shared middle legs with `per_leg` points on each side, giving
/// `legs * per_leg^2` composable pairs.
pub fn composable_batch<G: Rng>(rng: &mut G, legs: usize, per_leg: usize, which: Relation) -> (Vec<WfPoint>, Vec<WfPoint>) {
    let mut a = Vec::with_capacity(legs * per_leg);
    let mut b = Vec::with_capacity(legs * per_leg);
    for _ in 0..legs {
        let y = random_event(rng, 5.0);
        let k = random_null_future(rng);
        for _ in 0..per_leg {
            a.push(hadamard_ending_at(rng, y, k));
            b.push(fundamental_starting_at(rng, y, k, which));
        }
    }
    (a, b)
}

/// Negative controls: left points with past-directed `k_x`, which are not in
/// the Hadamard relation, paired with valid fundamental-solution points.
pub fn past_directed_batch<G: Rng>(rng: &mut G, legs: usize, which: Relation) -> (Vec<WfPoint>, Vec<WfPoint>) {
    let mut a = Vec::with_capacity(legs);
    let mut b = Vec::with_capacity(legs);
    for _ in 0..legs {
        let y = random_event(rng, 5.0);
        let k = random_null_future(rng).map(|v| -v);
        let s = rng.gen_range(-2.0..=2.0);
        a.push(WfPoint::primed(add(&y, &scale(&sharp(&k), s)), y, k, k));
        b.push(fundamental_starting_at(rng, y, k, which));
    }
    (a, b)
}
