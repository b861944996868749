use ccr_core::{imag_unit, normal_form, rational, real, AlgebraElement, BigRational, Complex, ExactPairing, GeneratorIndex};
use num_traits::{One, Signed, Zero};
use quasifree::{evaluate, QuasifreeState, TwoPointKernel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wick_hadamard::{
    alpha_coefficient, alpha_map, field, normal_order, wick_commutator, wick_expand, wick_expand_word, wick_product,
    DifferenceKernel, KernelTag, NormalOrdered, OrderingKernel, WickError, WickPolynomial, WickTensor,
};

type Q = BigRational;
type C = Complex<Q>;

fn rq(rng: &mut ChaCha8Rng) -> Q {
    rational(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn rc(rng: &mut ChaCha8Rng) -> C {
    Complex::new(rq(rng), rq(rng))
}

fn random_pairing(rng: &mut ChaCha8Rng, n: usize) -> ExactPairing {
    ExactPairing::from_fn(n, |_, _| rq(rng))
}

/// `H + (i/2) E` with `H` a random complex symmetric table.
fn random_kappa(rng: &mut ChaCha8Rng, e: &ExactPairing) -> OrderingKernel<Q> {
    let n = e.dim();
    let mut h = vec![C::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let v = rc(rng);
            h[i * n + j] = v.clone();
            h[j * n + i] = v;
        }
    }
    OrderingKernel::hadamard(&h, e).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, terms: usize) -> AlgebraElement<Q> {
    let mut a = AlgebraElement::zero();
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let word: Vec<GeneratorIndex> = (0..deg).map(|_| rng.gen_range(1..=n as GeneratorIndex)).collect();
        a.add_term(word, rc(rng));
    }
    a
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, real_only: bool) -> DifferenceKernel<Q> {
    let mut t = vec![C::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let v = if real_only { real(rq(rng)) } else { rc(rng) };
            t[i * n + j] = v.clone();
            t[j * n + i] = v;
        }
    }
    DifferenceKernel::new(n, t).unwrap()
}

fn random_tensor(rng: &mut ChaCha8Rng, degree: usize, basis: usize) -> WickTensor<Q> {
    WickTensor::from_multiset_fn(degree, basis, |_| rc(rng)).unwrap()
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, basis: usize) -> WickPolynomial<Q> {
    let mut p = WickPolynomial::new(basis);
    for deg in 0..=max_degree {
        p.add_tensor(&random_tensor(rng, deg, basis)).unwrap();
    }
    p
}

#[test]
fn two_field_example() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let e = random_pairing(&mut rng, 2);
    let k = random_kappa(&mut rng, &e);
    let got = wick_expand(&NormalOrdered::monomial(&[1, 2], C::one()), &k).unwrap();
    let mut want = AlgebraElement::word(&[1, 2]);
    want.add_term(vec![], -k.at(1, 2));
    assert!((&got - &want).is_zero());
}

#[test]
fn round_trip_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let e = random_pairing(&mut rng, n);
        let k = random_kappa(&mut rng, &e);
        let a = random_element(&mut rng, n, 6, 4);
        let no = normal_order(&a, &k).unwrap();
        // normal-ordered monomials are stored symmetrised, so words come back
        // reordered: equal modulo the commutation relations
        let back_a = wick_expand(&no, &k).unwrap();
        assert!((&normal_form(&back_a, &e) - &normal_form(&a, &e)).is_zero());
        let back = normal_order(&wick_expand(&no, &k).unwrap(), &k).unwrap();
        assert!(back.sub(&no).is_zero());
    }
}

#[test]
fn wick_theorem_matches_pairings() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let e = random_pairing(&mut rng, n);
        let mu: Vec<Vec<Q>> = {
            let mut m = vec![vec![rational(0, 1); n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = if i == j { rq(&mut rng).abs() } else { rq(&mut rng) };
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            m
        };
        let tp = TwoPointKernel::from_mu_e(&mu, &e);
        let state = QuasifreeState::new(tp.clone()).unwrap();
        let k = OrderingKernel::from_two_point(&tp).unwrap();
        assert_eq!(k.tag, KernelTag::State);
        let a = random_element(&mut rng, n, 8, 5);
        let direct = evaluate(&state, &a).unwrap();
        let via_wick = normal_order(&a, &k).unwrap().unit_coeff();
        assert_eq!(direct, via_wick);
    }
}

#[test]
fn product_agrees_with_ccr_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let n = rng.gen_range(2..=4);
        let e = random_pairing(&mut rng, n);
        let k = random_kappa(&mut rng, &e);
        let a = normal_order(&random_element(&mut rng, n, 4, 3), &k).unwrap();
        let b = normal_order(&random_element(&mut rng, n, 4, 3), &k).unwrap();
        let ab = wick_product(&a, &b, &k).unwrap();
        let lhs = normal_form(&wick_expand(&ab, &k).unwrap(), &e);
        let rhs = normal_form(&(&wick_expand(&a, &k).unwrap() * &wick_expand(&b, &k).unwrap()), &e);
        assert!((&lhs - &rhs).is_zero());
    }
}

#[test]
fn one_contraction_and_vacuum() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let e = random_pairing(&mut rng, 3);
    let k = random_kappa(&mut rng, &e);
    let p = wick_product(&field(1), &field(3), &k).unwrap();
    let mut want = NormalOrdered::monomial(&[1, 3], C::one());
    want.add_term(&[], k.at(1, 3));
    assert!(p.sub(&want).is_zero());
    // with kappa the state's two-point function only the contraction survives
    assert_eq!(p.unit_coeff(), k.at(1, 3));
}

#[test]
fn commutators_independent_of_kappa() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..20 {
        let e = random_pairing(&mut rng, 4);
        let k1 = random_kappa(&mut rng, &e);
        let k2 = random_kappa(&mut rng, &e);
        for i in 1..=4 {
            for j in 1..=4 {
                let c1 = wick_commutator(&field(i), &field(j), &k1).unwrap();
                let c2 = wick_commutator(&field(i), &field(j), &k2).unwrap();
                let want = NormalOrdered::monomial(&[], imag_unit::<Q>() * real(e.get(i, j)));
                assert!(c1.sub(&want).is_zero());
                assert!(c2.sub(&want).is_zero());
            }
        }
        // [phi(f)phi(g), phi(h)] as algebra elements, computed in both orderings
        let a = AlgebraElement::word(&[1, 2]);
        let b = AlgebraElement::word(&[3]);
        let mut results = Vec::new();
        for k in [&k1, &k2] {
            let c = wick_commutator(&normal_order(&a, k).unwrap(), &normal_order(&b, k).unwrap(), k).unwrap();
            results.push(normal_form(&wick_expand(&c, k).unwrap(), &e));
        }
        assert!((&results[0] - &results[1]).is_zero());
    }
}

fn permutations(v: &[GeneratorIndex]) -> Vec<Vec<GeneratorIndex>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[test]
fn normal_products_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let e = random_pairing(&mut rng, 4);
    let k = random_kappa(&mut rng, &e);
    for word in [vec![1, 2], vec![2, 1, 3], vec![4, 1, 3, 2]] {
        let reference = normal_form(&wick_expand_word(&word, &k).unwrap(), &e);
        for p in permutations(&word) {
            let other = normal_form(&wick_expand_word(&p, &k).unwrap(), &e);
            assert!((&other - &reference).is_zero());
        }
    }
}

#[test]
fn generating_function_degree_four() {
    // :exp phi(f): = exp(phi(f)) exp(-kappa(f,f)/2); at order four
    // :phi(f)^4: = phi(f)^4 - 6 K phi(f)^2 + 3 K^2 with K = kappa(f, f)
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let n = 3;
        let e = random_pairing(&mut rng, n);
        let k = random_kappa(&mut rng, &e);
        let c: Vec<C> = (0..n).map(|_| real(rq(&mut rng))).collect();
        let t = WickTensor::power(&c, 4).unwrap();
        let lhs = normal_form(&wick_expand(&t.to_normal_ordered(), &k).unwrap(), &e);
        let mut phi = AlgebraElement::zero();
        for (i, ci) in c.iter().enumerate() {
            phi.add_term(vec![i as GeneratorIndex + 1], ci.clone());
        }
        let mut kk = C::zero();
        for i in 0..n {
            for j in 0..n {
                kk = kk + c[i].clone() * c[j].clone() * k.at(i as u32 + 1, j as u32 + 1);
            }
        }
        let phi2 = &phi * &phi;
        let phi4 = &phi2 * &phi2;
        let six = real(rational(6, 1));
        let three = real(rational(3, 1));
        let rhs = &(&phi4 - &phi2.scale(&(six * kk.clone()))) + &AlgebraElement::scalar(three * kk.clone() * kk);
        assert!((&lhs - &normal_form(&rhs, &e)).is_zero());
    }
}

#[test]
fn invalid_ordering_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let e = random_pairing(&mut rng, 2);
    // antisymmetric part off by a factor of two
    let bad = OrderingKernel::from_fn(2, KernelTag::Hadamard, &e, |i, j| imag_unit::<Q>() * real(e.get(i, j)));
    assert!(matches!(bad, Err(WickError::OrderingKernelInvalid { .. })));
    let k = random_kappa(&mut rng, &e);
    assert!(matches!(
        normal_order(&AlgebraElement::word(&[1, 3]), &k),
        Err(WickError::UnknownGenerator { label: 3, .. })
    ));
    assert!(matches!(
        wick_product(&NormalOrdered::monomial(&[1; 5], C::one()), &field(1), &k),
        Err(WickError::DegreeGuard { degree: 5, max: 4 })
    ));
}

#[test]
fn alpha_two_point_example() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let d = random_symmetric(&mut rng, 3, false);
    let f: Vec<C> = (0..3).map(|_| rc(&mut rng)).collect();
    let w = WickPolynomial::from_tensor(WickTensor::power(&f, 2).unwrap());
    let out = alpha_map(&d, &w).unwrap();
    assert_eq!(out.tensor(2), w.tensor(2));
    let mut dff = C::zero();
    for i in 0..3 {
        for j in 0..3 {
            dff = dff + d.at(i, j) * f[i].clone() * f[j].clone();
        }
    }
    assert_eq!(out.tensor(0).unwrap().get(&[]), dff);
    assert_eq!(alpha_coefficient(2, 1), 1);
}

#[test]
fn alpha_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let w = random_poly(&mut rng, 6, 3);
    assert_eq!(alpha_map(&DifferenceKernel::zero(3), &w).unwrap(), w);
}

#[test]
fn alpha_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..3 {
        let d1 = random_symmetric(&mut rng, 6, false);
        let d2 = random_symmetric(&mut rng, 6, false);
        let w = random_poly(&mut rng, 4, 6);
        let lhs = alpha_map(&d2, &alpha_map(&d1, &w).unwrap()).unwrap();
        let rhs = alpha_map(&d1.add(&d2).unwrap(), &w).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn alpha_is_change_of_ordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..3 {
        let e = random_pairing(&mut rng, 6);
        let k = random_kappa(&mut rng, &e);
        let k2 = random_kappa(&mut rng, &e);
        let d = DifferenceKernel::between(&k, &k2).unwrap();
        let w = random_poly(&mut rng, 4, 6);
        let as_element = wick_expand(&w.to_normal_ordered(), &k).unwrap();
        let reordered = normal_order(&as_element, &k2).unwrap();
        let via_alpha = alpha_map(&d, &w).unwrap().to_normal_ordered();
        assert!(reordered.sub(&via_alpha).is_zero());
    }
}

#[test]
fn alpha_preserves_star() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let d = random_symmetric(&mut rng, 4, true);
    let w = random_poly(&mut rng, 4, 4);
    assert_eq!(alpha_map(&d, &w.conj()).unwrap(), alpha_map(&d, &w).unwrap().conj());
}

#[test]
fn alpha_rejects_bad_input() {
    let one = C::one();
    let zero = C::zero();
    let bad = DifferenceKernel::new(2, vec![zero.clone(), one.clone(), zero.clone(), zero.clone()]);
    assert!(matches!(bad, Err(WickError::InvalidDifference { i: 0, j: 1 })));
    let nonsym = WickTensor::new(2, 2, vec![zero.clone(), one, zero.clone(), zero]);
    assert!(matches!(nonsym, Err(WickError::NotSymmetric { .. })));
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let w = WickPolynomial::from_tensor(random_tensor(&mut rng, 7, 2));
    assert!(matches!(alpha_map(&DifferenceKernel::zero(2), &w), Err(WickError::DegreeGuard { degree: 7, max: 6 })));
}
