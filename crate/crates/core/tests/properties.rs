use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcode::gabidulin::{interpolation_basis, GabidulinCode, Message};
use rankcode::gf::{Fe, GaloisField};
use rankcode::linpoly::{annihilator, fq_rank, monic_annihilator, LinPoly};
use rankcode::rank_metric::{random_error, rank_distance, rank_norm};
use rankcode::twisted::{forbidden_norm, DecodePath, TwistedCode};

fn field(q: u32, n: usize) -> GaloisField {
    GaloisField::new(q, n).unwrap()
}

fn valid_eta(f: &GaloisField, k: usize, rng: &mut ChaCha8Rng) -> Fe {
    let bad = forbidden_norm(f.characteristic(), f.degree(), k);
    loop {
        let eta = f.random_nonzero(rng);
        if f.norm_residue(eta) != bad {
            return eta;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_f81(i in 0u64..81, j in 0u64..81, l in 0u64..81) {
        let f = field(3, 4);
        let (a, b, c) = (f.element_at(i), f.element_at(j), f.element_at(l));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        prop_assert_eq!(f.index_of(a), i);
    }

    #[test]
    fn frobenius_is_a_field_automorphism(i in 0u64..256, j in 0u64..256, e in 0usize..8) {
        let f = field(2, 8);
        let (a, b) = (f.element_at(i), f.element_at(j));
        prop_assert_eq!(f.frobenius(f.add(a, b), e), f.add(f.frobenius(a, e), f.frobenius(b, e)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), e), f.mul(f.frobenius(a, e), f.frobenius(b, e)));
        prop_assert_eq!(f.frobenius(a, 8), a);
        prop_assert_eq!(f.frobenius(a, e), f.pow(a, 2u64.pow(e as u32)));
    }

    #[test]
    fn norm_is_multiplicative_and_frobenius_invariant(i in 1u64..625, j in 1u64..625) {
        let f = field(5, 4);
        let (a, b) = (f.element_at(i), f.element_at(j));
        prop_assert!(f.is_base(f.norm(a)));
        prop_assert_eq!(f.norm(f.mul(a, b)), f.mul(f.norm(a), f.norm(b)));
        prop_assert_eq!(f.norm(f.frobenius(a, 1)), f.norm(a));
    }

    #[test]
    fn division_round_trips(seed in any::<u64>()) {
        let f = field(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rand_poly = |len: usize| LinPoly::from_coeffs((0..len).map(|_| f.random(&mut rng)).collect());
        let (a, g) = (rand_poly(6), rand_poly(3));
        prop_assume!(g.qdeg().is_some());
        let d = g.qdeg().unwrap();
        let (ql, rl) = a.divide_left(&f, &g).unwrap();
        prop_assert_eq!(g.compose(&f, &ql).add(&f, &rl), a.clone());
        prop_assert!(rl.qdeg().is_none_or(|e| e < d));
        let (qr, rr) = a.divide_right(&f, &g).unwrap();
        prop_assert_eq!(qr.compose(&f, &g).add(&f, &rr), a);
        prop_assert!(rr.qdeg().is_none_or(|e| e < d));
    }

    #[test]
    fn root_space_dimension_is_at_most_q_degree(seed in any::<u64>()) {
        let f = field(2, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = LinPoly::from_coeffs((0..4).map(|_| f.random(&mut rng)).collect());
        prop_assume!(!p.is_zero());
        let roots = p.kernel(&f).unwrap();
        prop_assert!(roots.len() <= p.qdeg().unwrap());
        prop_assert_eq!(fq_rank(&f, &roots), roots.len());
        for &z in &roots {
            prop_assert!(p.eval(&f, z).is_zero());
        }
    }

    #[test]
    fn subspace_polynomials_agree(seed in any::<u64>(), k in 1usize..4) {
        let f = field(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis: Vec<Fe> = (0..k).map(|_| f.random(&mut rng)).collect();
        prop_assume!(fq_rank(&f, &basis) == k);
        let h = annihilator(&f, &basis).unwrap();
        let m = monic_annihilator(&f, &basis).unwrap();
        prop_assert_eq!(h.scale(&f, f.inv(h.coeff(k)).unwrap()), m);
        prop_assert_eq!(h.kernel(&f).unwrap().len(), k);
    }

    #[test]
    fn twisted_codewords_have_small_root_space(seed in any::<u64>(), k in 1usize..4, r in 0usize..4) {
        let f = field(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eta = valid_eta(&f, k, &mut rng);
        let code = TwistedCode::new(f.clone(), k, eta, r, None).unwrap();
        let msg = Message((0..k).map(|_| f.random(&mut rng)).collect());
        prop_assume!(msg.iter().any(|c| !c.is_zero()));
        let p = code.message_poly(&msg).unwrap();
        prop_assert!(p.kernel(&f).unwrap().len() < k);
        prop_assert!(rank_norm(&f, &code.encode(&msg).unwrap()) > 4 - k);
    }

    #[test]
    fn twisted_decoding_within_radius(seed in any::<u64>(), cfg in 0usize..4) {
        let (q, n, k) = [(3, 4, 2), (3, 5, 1), (3, 5, 2), (5, 5, 3)][cfg];
        let f = field(q, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eta = valid_eta(&f, k, &mut rng);
        let r = (seed as usize) % n;
        let code = TwistedCode::new(f.clone(), k, eta, r, None).unwrap();
        let msg = Message((0..k).map(|_| f.random(&mut rng)).collect());
        let t = (seed as usize / n) % (code.max_radius() + 1);
        let received = code.encode(&msg).unwrap().add(&f, &random_error(&f, t, &mut rng).unwrap()).unwrap();
        let decoded = code.decode_detailed(&received).unwrap().expect("within radius");
        prop_assert_eq!(decoded.message, msg);
        prop_assert!(decoded.radius >= t);
    }

    #[test]
    fn division_and_ratio_steps_agree(seed in any::<u64>()) {
        let f = field(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eta = valid_eta(&f, 2, &mut rng);
        let code = TwistedCode::new(f.clone(), 2, eta, 3, None).unwrap();
        let msg = Message(vec![f.random(&mut rng), f.random(&mut rng)]);
        let received = code.encode(&msg).unwrap().add(&f, &random_error(&f, 1, &mut rng).unwrap()).unwrap();
        let basis = interpolation_basis(&f, code.alpha(), &received, 2, 1).unwrap();
        let (roots, _) = code.f0_candidates(1, &basis).unwrap();
        prop_assert!(roots.contains(&msg[0]));
        if let Some(m) = code.division_step(&received, 1, &basis).unwrap() {
            prop_assert_eq!(m, msg);
        }
    }

    #[test]
    fn gabidulin_decoding_within_radius(seed in any::<u64>()) {
        let f = field(2, 8);
        let code = GabidulinCode::new(f.clone(), 4, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let msg = Message((0..4).map(|_| f.random(&mut rng)).collect());
        let t = (seed % 3) as usize;
        let received = code.encode(&msg).unwrap().add(&f, &random_error(&f, t, &mut rng).unwrap()).unwrap();
        let decoded = code.decode(&received).unwrap();
        prop_assert_eq!(decoded.as_ref(), Some(&msg));
        prop_assert!(rank_distance(&f, &code.encode(&msg).unwrap(), &received).unwrap() <= t);
    }
}

#[test]
fn decoder_uses_the_quadratic_when_the_ratio_exponent_vanishes() {
    let f = field(3, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let eta = valid_eta(&f, 2, &mut rng);
    let code = TwistedCode::new(f.clone(), 2, eta, 3, None).unwrap();
    assert_eq!(code.ratio_exponent(1), 0);
    let mut seen_quadratic = false;
    for _ in 0..20 {
        let msg = Message(vec![f.random(&mut rng), f.random(&mut rng)]);
        let received = code.encode(&msg).unwrap().add(&f, &random_error(&f, 1, &mut rng).unwrap()).unwrap();
        let d = code.decode_detailed(&received).unwrap().unwrap();
        assert_eq!(d.message, msg);
        seen_quadratic |= d.path == DecodePath::Quadratic;
    }
    assert!(seen_quadratic);
}
