use std::time::Instant;

use microlocal_flat::sample::{composable_batch, past_directed_batch, random_event, random_null_future};
use microlocal_flat::{
    classify_wf_point, compose_check, geodesic_related, samples_from_csv, samples_to_csv, sharp, Relation, WfPoint,
    DEFAULT_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = DEFAULT_TOL;
const K: [f64; 4] = [1.0, 1.0, 0.0, 0.0];

#[test]
fn related_examples() {
    // along the ray y = x + s k^sharp; for k = (1,1,0,0), k^sharp = (1,-1,0,0)
    let y = [2.0, -2.0, 0.0, 0.0];
    assert!(geodesic_related(&WfPoint::primed([0.0; 4], y, K, K), TOL));
    assert!(!geodesic_related(&WfPoint::primed([0.0; 4], [2.0, 2.0, 0.0, 0.0], K, K), TOL));
    let timelike = [1.0, 0.5, 0.0, 0.0];
    assert!(!geodesic_related(&WfPoint::primed([0.0; 4], [1.0, -0.5, 0.0, 0.0], timelike, timelike), TOL));
    assert!(geodesic_related(&WfPoint::primed([3.0; 4], [3.0; 4], K, K), TOL));
    // transported covector must agree
    assert!(!geodesic_related(&WfPoint::primed([0.0; 4], y, K, [2.0, 2.0, 0.0, 0.0]), TOL));
}

#[test]
fn classification_examples() {
    let x = [0.5, 0.1, -0.3, 0.2];
    let l = sharp(&K).map(|v| 1.5 * v);
    let y = [x[0] + l[0], x[1] + l[1], x[2] + l[2], x[3] + l[3]];
    assert!(classify_wf_point(&WfPoint::primed(x, y, K, K), Relation::Hadamard, TOL));
    let past = K.map(|v| -v);
    assert!(!classify_wf_point(&WfPoint::primed(x, y, past, past), Relation::Hadamard, TOL));
    // delta in wavefront-set signs: (x, x, k, -k)
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let k = random_event(&mut rng, 3.0);
        let p = WfPoint::from_unprimed(x, x, k, k.map(|v| -v));
        assert!(classify_wf_point(&p, Relation::Delta, TOL));
        assert_eq!(p.to_unprimed(), (x, x, k, k.map(|v| -v)));
    }
    assert!(!classify_wf_point(&WfPoint::primed(x, x, [0.0; 4], [0.0; 4]), Relation::Delta, TOL));
    // F+: x in J+(y); here y is in the future of x, so (y, x) is in F+ and (x, y) in F-
    assert!(classify_wf_point(&WfPoint::primed(y, x, K, K), Relation::FPlus, TOL));
    assert!(classify_wf_point(&WfPoint::primed(y, x, past, past), Relation::FPlus, TOL));
    assert!(!classify_wf_point(&WfPoint::primed(x, y, K, K), Relation::FPlus, TOL));
    assert!(classify_wf_point(&WfPoint::primed(x, y, K, K), Relation::FMinus, TOL));
}

#[test]
fn transitivity_on_a_ray() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let k = random_null_future(&mut rng);
        let x = random_event(&mut rng, 4.0);
        let step = |p: [f64; 4], s: f64| {
            let v = sharp(&k);
            [p[0] + s * v[0], p[1] + s * v[1], p[2] + s * v[2], p[3] + s * v[3]]
        };
        let y = step(x, rng.gen_range(-2.0..2.0));
        let z = step(y, rng.gen_range(-2.0..2.0));
        assert!(geodesic_related(&WfPoint::primed(x, y, k, k), TOL));
        assert!(geodesic_related(&WfPoint::primed(y, z, k, k), TOL));
        assert!(geodesic_related(&WfPoint::primed(x, z, k, k), TOL));
    }
}

#[test]
fn cone_scaling_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (a, b) = composable_batch(&mut rng, 20, 5, Relation::FPlus);
    for lambda in [1e-3, 0.5, 7.0, 1e4] {
        for p in &a {
            assert!(classify_wf_point(&p.scaled(lambda), Relation::Hadamard, TOL));
        }
        for p in &b {
            assert!(classify_wf_point(&p.scaled(lambda), Relation::FPlus, TOL));
        }
    }
}

#[test]
fn hadamard_after_fundamental_stays_hadamard() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let start = Instant::now();
    for which in [Relation::FPlus, Relation::FMinus] {
        let (a, b) = composable_batch(&mut rng, 100, 10, which);
        assert!(a.iter().all(|p| classify_wf_point(p, Relation::Hadamard, TOL)));
        assert!(b.iter().all(|p| classify_wf_point(p, which, TOL)));
        let report = compose_check(&a, &b, Relation::Hadamard, TOL);
        assert_eq!(report.composites, 10_000);
        assert!(report.passed(), "{} violations", report.violations.len());
    }
    assert!(start.elapsed().as_secs_f64() < 30.0);
}

#[test]
fn past_directed_controls_are_flagged() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (a, b) = past_directed_batch(&mut rng, 200, Relation::FPlus);
    let report = compose_check(&a, &b, Relation::Hadamard, TOL);
    assert_eq!(report.composites, 200);
    assert_eq!(report.violations.len(), 200);
    assert!(!report.passed());
}

#[test]
fn delta_is_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (_, f) = composable_batch(&mut rng, 50, 4, Relation::FMinus);
    let deltas: Vec<WfPoint> = f.iter().map(|p| WfPoint::primed(p.x, p.x, p.kx, p.kx)).collect();
    let report = compose_check(&deltas, &f, Relation::FMinus, TOL);
    assert!(report.passed());
    assert!(report.composites >= f.len());
}

#[test]
fn empty_join_is_vacuous() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (a, _) = composable_batch(&mut rng, 5, 2, Relation::FPlus);
    let (_, b) = composable_batch(&mut rng, 5, 2, Relation::FPlus);
    let report = compose_check(&a, &b, Relation::Hadamard, TOL);
    assert_eq!(report.composites, 0);
    assert!(report.warning.is_some());
    assert!(!report.passed());
}

#[test]
fn csv_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (a, _) = composable_batch(&mut rng, 3, 2, Relation::FPlus);
    let rows: Vec<(WfPoint, String)> = a.iter().map(|p| (*p, "hadamard".to_string())).collect();
    let text = samples_to_csv(&rows);
    assert_eq!(samples_from_csv(&text).unwrap(), rows);
    assert!(samples_from_csv("x0\n1\n").is_err());
}
