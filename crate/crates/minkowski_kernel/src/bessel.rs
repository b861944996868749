//! Modified Bessel functions of order one for complex argument, principal
//! branch (cut along the negative real axis).

use num_complex::Complex64;
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SERIES_RADIUS: f64 = 2.0;
const MAX_TERMS: usize = 10_000;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `I_1(z)`.
pub fn bessel_i1(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        i1_series(z)
    } else {
        i1_miller(z)
    }
}

/// `(z/2) sum_k (z^2/4)^k / (k! (k+1)!)`.
fn i1_series(z: Complex64) -> Complex64 {
    let q = z * z / 4.0;
    let mut term = z / 2.0;
    let mut sum = term;
    for k in 1..60 {
        term *= q / (k * (k + 1)) as f64;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// Backward recurrence `I_{k-1} = I_{k+1} + (2k/z) I_k` normalised by
/// `e^z = I_0 + 2 sum_{k>=1} I_k`.
fn i1_miller(z: Complex64) -> Complex64 {
    let start = 2 * (z.norm() as usize + 20);
    let mut above = c(0.0);
    let mut cur = c(1e-30);
    let mut sum = c(0.0);
    let mut i1 = c(0.0);
    for k in (1..=start).rev() {
        let below = above + cur * (2.0 * k as f64) / z;
        above = cur;
        cur = below;
        // cur is now I_{k-1}
        sum += if k == 1 { cur } else { 2.0 * cur };
        if k == 2 {
            i1 = cur;
        }
        if cur.norm() > 1e250 {
            above /= 1e250;
            cur /= 1e250;
            sum /= 1e250;
            i1 /= 1e250;
        }
    }
    i1 / sum * z.exp()
}

/// `K_1(z)` for `Re z >= 0` (and elsewhere off the cut).
pub fn bessel_k1(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        k1_series(z)
    } else {
        k1_steed(z)
    }
}

/// `1/z + ln(z/2) I_1(z) - (z/4) sum_k (psi(k+1) + psi(k+2)) (z^2/4)^k / (k! (k+1)!)`.
fn k1_series(z: Complex64) -> Complex64 {
    let q = z * z / 4.0;
    let mut term = c(1.0);
    let mut harmonic = 0.0;
    let mut sum = c(0.0);
    for k in 0..60 {
        if k > 0 {
            term *= q / (k * (k + 1)) as f64;
            harmonic += 1.0 / k as f64;
        }
        let psi_sum = -2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (k + 1) as f64;
        let add = term * psi_sum;
        sum += add;
        if k > 2 && add.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    z.inv() + (z / 2.0).ln() * i1_series(z) - z / 4.0 * sum
}

/// Steed's continued fraction for `K_0`, `K_1` (Temme's normalisation).
fn k1_steed(z: Complex64) -> Complex64 {
    let mut b = 2.0 * (c(1.0) + z);
    let mut d = b.inv();
    let mut h = d;
    let mut delh = d;
    let (mut q1, mut q2) = (c(0.0), c(1.0));
    let a1 = 0.25;
    let mut q = c(a1);
    let mut cc = a1;
    let mut a = -a1;
    let mut s = c(1.0) + q * delh;
    for i in 2..MAX_TERMS {
        a -= 2.0 * (i - 1) as f64;
        cc = -a * cc / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0;
        d = (b + a * d).inv();
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if dels.norm() < 1e-17 * s.norm() && delh.norm() < 1e-17 * h.norm() {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * z)).sqrt() * (-z).exp() / s;
    k0 * (z + 0.5 - h) / z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches_meet_at_switchover() {
        for arg in [0.0, 0.7, 1.5, 3.0] {
            let z = Complex64::from_polar(SERIES_RADIUS, arg - 1.5);
            let (a, b) = (k1_series(z), k1_steed(z));
            assert!((a - b).norm() <= 1e-13 * a.norm(), "{z}: {a} {b}");
            let (a, b) = (i1_series(z), i1_miller(z));
            assert!((a - b).norm() <= 1e-13 * a.norm(), "{z}: {a} {b}");
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let z = Complex64::new(0.8, 3.1);
        assert!((bessel_k1(z.conj()) - bessel_k1(z).conj()).norm() < 1e-15);
    }
}
