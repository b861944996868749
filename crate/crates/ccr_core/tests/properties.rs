use ccr_core::normal::rewrite_step;
use ccr_core::{
    commutator, find_simplicity_witness, imag_unit, induced_map, normal_form, parse_element, rational, real,
    simplicity_probe, AlgebraElement, BigRational, Complex, ExactElement, ExactPairing, Parity, PairingForm,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rational(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_element(rng: &mut ChaCha8Rng, gens: u32, max_deg: usize, terms: usize) -> ExactElement {
    let mut a = AlgebraElement::zero();
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let w: Vec<u32> = (0..deg).map(|_| rng.gen_range(1..=gens)).collect();
        a.add_term(w, Complex::new(small_rational(rng), small_rational(rng)));
    }
    a
}

fn random_pairing(rng: &mut ChaCha8Rng, n: usize) -> ExactPairing {
    PairingForm::from_fn(n, |_, _| small_rational(rng))
}

#[test]
fn spec_rewrite_example() {
    let mut e = ExactPairing::zero(2);
    e.set(1, 2, rational(1, 1)).unwrap();
    let nf = normal_form(&parse_element("phi(2)phi(1)phi(2)").unwrap(), &e);
    assert_eq!(nf.to_string(), "(0-1*i)*phi(2) + (1+0*i)*phi(1)phi(2)phi(2)");
}

#[test]
fn normal_form_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let e = random_pairing(&mut rng, 4);
        let a = random_element(&mut rng, 4, 4, 3);
        let b = random_element(&mut rng, 4, 4, 3);
        let na = normal_form(&a, &e);
        assert!(na.is_ordered());
        assert_eq!(normal_form(&na, &e), na);
        assert_eq!(
            normal_form(&a.multiply(&b), &e),
            normal_form(&normal_form(&a, &e).multiply(&normal_form(&b, &e)), &e)
        );
        // star is anti-multiplicative and commutes with nf for real E
        assert_eq!(a.multiply(&b).star(), b.star().multiply(&a.star()));
        assert_eq!(normal_form(&a.star(), &e), normal_form(&normal_form(&a, &e).star(), &e));
    }
}

#[test]
fn brute_force_rewriting_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let e = random_pairing(&mut rng, 3);
        let a = random_element(&mut rng, 3, 5, 2);
        let mut x = a.clone();
        while let Some(next) = rewrite_step(&x, &e) {
            x = next;
        }
        assert_eq!(normal_form(&a, &e), x);
    }
}

#[test]
fn relation_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let e = random_pairing(&mut rng, 5);
    for i in 1..=5u32 {
        for j in 1..=5u32 {
            let c = commutator(&AlgebraElement::generator(i), &AlgebraElement::generator(j), &e);
            let rel = &c - &AlgebraElement::scalar(imag_unit::<BigRational>() * real(e.get(i, j)));
            assert!(normal_form(&rel, &e).is_zero());
        }
    }
}

#[test]
fn filtration_drop_by_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let e = random_pairing(&mut rng, 4);
    for _ in 0..50 {
        let deg = rng.gen_range(2..=6);
        let w: Vec<u32> = (0..deg).map(|_| rng.gen_range(1..=4)).collect();
        let k = rng.gen_range(0..deg - 1);
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        let d = &normal_form(&AlgebraElement::word(&swapped), &e) - &normal_form(&AlgebraElement::word(&w), &e);
        assert!(d.is_zero() || d.degree() <= deg - 2);
    }
}

fn random_symplectic_2(rng: &mut ChaCha8Rng) -> Vec<Vec<BigRational>> {
    // det = 1 matrices preserve the standard form on two generators
    loop {
        let (a, b, c) = (small_rational(rng), small_rational(rng), small_rational(rng));
        if a == rational(0, 1) {
            continue;
        }
        let d = (rational(1, 1) + b.clone() * c.clone()) / a.clone();
        return vec![vec![a, b], vec![c, d]];
    }
}

#[test]
fn induced_maps_compose() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let e = ExactPairing::standard_symplectic(1);
    let flip = vec![vec![rational(1, 1), rational(0, 1)], vec![rational(0, 1), rational(-1, 1)]];
    for round in 0..20 {
        let s1 = random_symplectic_2(&mut rng);
        let s2 = if round % 2 == 0 {
            random_symplectic_2(&mut rng)
        } else {
            ccr_core::linalg::matmul(&random_symplectic_2(&mut rng), &flip)
        };
        let p2 = if round % 2 == 0 { Parity::Preserving } else { Parity::Reversing };
        let a1 = induced_map(s1, Parity::Preserving, &e).unwrap();
        let a2 = induced_map(s2, p2, &e).unwrap();
        let comp = a1.compose(&a2);
        let x = random_element(&mut rng, 2, 4, 3);
        assert_eq!(a1.apply(&a2.apply(&x)), comp.apply(&x));
        let back = comp.inverse().unwrap();
        assert_eq!(normal_form(&back.apply(&comp.apply(&x)), &e), normal_form(&x, &e));
        // relations survive the map
        let lhs = commutator(&comp.apply(&AlgebraElement::generator(1)), &comp.apply(&AlgebraElement::generator(2)), &e);
        assert_eq!(lhs, comp.apply(&AlgebraElement::scalar(imag_unit())));
    }
}

#[test]
fn simplicity_witnesses_exist() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in [2usize, 4] {
        let e = loop {
            let e = random_pairing(&mut rng, n);
            if e.is_weakly_nondegenerate() {
                break e;
            }
        };
        for _ in 0..30 {
            let a = random_element(&mut rng, n as u32, 3, 3);
            if normal_form(&a, &e).is_scalar() {
                continue;
            }
            let (probes, v) = find_simplicity_witness(&a, &e).expect("witness");
            assert_eq!(simplicity_probe(&a, &probes, &e).unwrap(), v);
        }
    }
}

#[test]
fn degenerate_form_can_hide_witness() {
    let e = ExactPairing::zero(2);
    assert!(find_simplicity_witness(&AlgebraElement::<BigRational>::generator(1), &e).is_none());
}

proptest! {
    #[test]
    fn star_is_involutive(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&mut rng, 4, 5, 4);
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(parse_element::<BigRational>(&a.to_string()).unwrap(), a);
    }
}
