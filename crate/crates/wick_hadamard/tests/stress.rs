use minkowski_kernel::{remainder_coincidence, remainder_symmetric, KernelParams, SeparationPoint};
use wick_hadamard::{
    divergence, phi2_h_expectation, stress_energy, trace, ConstantKernel, Event, MinkowskiRemainder, StressConfig,
    TranslationInvariant, WickError, METRIC,
};

fn gaussian(d: &Event) -> f64 {
    0.8 * (-(0.7 * d[0] * d[0] + d[1] * d[1] + 1.3 * d[2] * d[2] + 0.9 * d[3] * d[3] + 0.4 * d[0] * d[1])).exp()
}

#[test]
fn constant_kernel_closed_form() {
    for (m, c) in [(1.0, 1.0), (1.3, 0.7), (0.4, -2.5)] {
        let cfg = StressConfig { m, ..StressConfig::default() };
        let s = stress_energy(&ConstantKernel(c), &[0.3, -0.2, 1.0, 0.5], &cfg).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let want = if a == b { METRIC[a] * m * m * c / 6.0 } else { 0.0 };
                assert!((s.t[a][b] - want).abs() <= 1e-10, "T[{a}][{b}] = {}", s.t[a][b]);
            }
        }
    }
}

#[test]
fn zero_kernel_gives_zero() {
    let s = stress_energy(&ConstantKernel(0.0), &[1.0, 2.0, 3.0, 4.0], &StressConfig::default()).unwrap();
    assert!(s.t.iter().flatten().all(|v| *v == 0.0));
}

#[test]
fn translation_invariant_is_conserved() {
    let k = TranslationInvariant(gaussian);
    for xi in [0.0, 1.0 / 6.0] {
        let cfg = StressConfig { xi, m: 0.9, ..StressConfig::default() };
        for x in [[0.0; 4], [0.4, -1.0, 0.3, 2.0]] {
            let s = stress_energy(&k, &x, &cfg).unwrap();
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(s.t[a][b], s.t[b][a]);
                }
            }
            let div = divergence(&k, &x, &cfg, 0.1).unwrap();
            let worst = div.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            assert!(worst <= 1e-8, "divergence {worst:e}");
        }
    }
}

#[test]
fn non_invariant_kernel_is_not_conserved() {
    // negative control for the divergence check
    let k = |x: &Event, y: &Event| ((x[0] + y[0]) * 0.5).sin() * gaussian(&[x[0] - y[0], x[1] - y[1], 0.0, 0.0]);
    let div = divergence(&k, &[0.2, 0.0, 0.0, 0.0], &StressConfig::default(), 0.1).unwrap();
    assert!(div.iter().any(|v| v.abs() > 1e-3));
}

#[test]
fn trace_term_change() {
    let k = TranslationInvariant(gaussian);
    let cfg = StressConfig { m: 1.1, ..StressConfig::default() };
    let s = stress_energy(&k, &[0.0; 4], &cfg).unwrap();
    assert!(s.p_x_w.abs() > 1e-2);
    for a in 0..4 {
        for b in 0..4 {
            let g = if a == b { METRIC[a] } else { 0.0 };
            assert!((s.t[a][b] - s.canonical[a][b] + g * s.p_x_w / 3.0).abs() <= 1e-12);
        }
    }
    let change = trace(&s.t) - trace(&s.canonical);
    assert!((change + 4.0 * s.p_x_w / 3.0).abs() <= 1e-12);
}

#[test]
fn minkowski_vacuum_closed_form() {
    // w = w0 + w1 sigma + ...: T_ab = g_ab (2 w1 / 3 + m^2 w0 / 6) for every xi
    let m = 1.0;
    let params = KernelParams::massive(m);
    let w0 = remainder_symmetric(0.0, &params).unwrap();
    let h = 1e-4;
    let w1 = (remainder_symmetric(h, &params).unwrap() - remainder_symmetric(-h, &params).unwrap()) / (2.0 * h);
    let want = 2.0 * w1 / 3.0 + m * m * w0 / 6.0;
    for xi in [0.0, 0.3] {
        let cfg = StressConfig { m, xi, ..StressConfig::default() };
        let s = stress_energy(&MinkowskiRemainder(params), &[0.5, 0.1, -0.2, 0.0], &cfg).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let g = if a == b { METRIC[a] } else { 0.0 };
                assert!((s.t[a][b] - g * want).abs() <= 1e-7 * want.abs(), "xi {xi} T[{a}][{b}] {} vs {}", s.t[a][b], g * want);
            }
        }
    }
}

#[test]
fn unresolved_kernel_is_rejected() {
    let k = TranslationInvariant(|d: &Event| (1e4 * d[0]).cos());
    assert!(matches!(stress_energy(&k, &[0.0; 4], &StressConfig::default()), Err(WickError::Resolution { .. })));
}

#[test]
fn coincidence_limit() {
    for m in [1.0, 2.0] {
        let params = KernelParams::massive(m);
        let got = phi2_h_expectation(&params, |_| 0.0).unwrap();
        let want = remainder_coincidence(m, params.lambda);
        assert!((got - want).abs() <= 1e-8 * want.abs(), "{got} vs {want}");
    }
}

#[test]
fn coincidence_lambda_shift() {
    let m = 1.0;
    let params = KernelParams::massive(m);
    let moved = KernelParams { lambda: 2.5, ..params };
    let v0 = m * m / (16.0 * std::f64::consts::PI.powi(2));
    let a = phi2_h_expectation(&params, |_| 0.0).unwrap();
    let b = phi2_h_expectation(&moved, |_| 0.0).unwrap();
    let predicted = -v0 * (params.lambda.powi(2) / moved.lambda.powi(2)).ln();
    assert!((b - a - predicted).abs() <= 1e-10, "{} vs {predicted}", b - a);
}

#[test]
fn coincidence_perturbation() {
    let params = KernelParams::massive(1.0);
    let s = |p: &SeparationPoint| 0.3 * (p.r * p.r - p.dt * p.dt).cos();
    let a = phi2_h_expectation(&params, |_| 0.0).unwrap();
    let b = phi2_h_expectation(&params, s).unwrap();
    assert!((b - a - 0.3).abs() <= 1e-10);
}
