//! Fast sanity checks behind `rankcode selftest`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gabidulin::{GabidulinCode, Message};
use crate::gf::GaloisField;
use crate::linpoly::LinPoly;
use crate::oracle::{oracle_min_distance, oracle_nearest, OracleBudget};
use crate::rank_metric::random_error;
use crate::twisted::TwistedCode;

fn field_axioms() -> bool {
    let f = GaloisField::new(3, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..200).all(|_| {
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            && (a.is_zero() || f.mul(a, f.inv(a).unwrap()) == f.one())
    })
}

fn ring_laws() -> bool {
    let f = GaloisField::new(3, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut poly = |len: usize| LinPoly::from_coeffs((0..len).map(|_| f.random(&mut rng)).collect());
    (0..50).all(|_| {
        let (a, b, c) = (poly(3), poly(2), poly(3));
        let x = f.random(&mut ChaCha8Rng::seed_from_u64(3));
        a.compose(&f, &b).compose(&f, &c) == a.compose(&f, &b.compose(&f, &c))
            && a.compose(&f, &b.add(&f, &c)) == a.compose(&f, &b).add(&f, &a.compose(&f, &c))
            && a.compose(&f, &b).eval(&f, x) == a.eval(&f, b.eval(&f, x))
    })
}

fn gabidulin_mrd() -> bool {
    let f = GaloisField::new(2, 4).unwrap();
    let code = GabidulinCode::new(f, 2, None).unwrap();
    oracle_min_distance(&code, &OracleBudget::default()).ok() == Some(3)
}

fn twisted_round_trip() -> bool {
    let f = GaloisField::new(3, 4).unwrap();
    let eta = f.elements().unwrap().find(|&a| f.norm_residue(a) == 2).unwrap();
    let code = TwistedCode::new(f.clone(), 2, eta, 3, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    (0..20).all(|_| {
        let m = Message(vec![f.random(&mut rng), f.random(&mut rng)]);
        let e = random_error(&f, 1, &mut rng).unwrap();
        let r = code.encode(&m).unwrap().add(&f, &e).unwrap();
        code.decode(&r).unwrap() == Some(m)
    })
}

fn oracle_agreement() -> bool {
    let f = GaloisField::new(3, 4).unwrap();
    let eta = f.elements().unwrap().find(|&a| f.norm_residue(a) == 2).unwrap();
    let code = TwistedCode::new(f.clone(), 2, eta, 3, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    (0..3).all(|_| {
        let m = Message(vec![f.random(&mut rng), f.random(&mut rng)]);
        let e = random_error(&f, 1, &mut rng).unwrap();
        let r = code.encode(&m).unwrap().add(&f, &e).unwrap();
        let hit = oracle_nearest(&code, &r, &OracleBudget::default()).unwrap();
        hit.unique && code.decode(&r).unwrap() == Some(hit.message)
    })
}

/// Named pass/fail results.
pub fn run_all() -> Vec<(&'static str, bool)> {
    vec![
        ("F_81 field axioms", field_axioms()),
        ("linearized ring laws", ring_laws()),
        ("Gabidulin q=2 n=4 k=2 min distance 3", gabidulin_mrd()),
        ("twisted q=3 n=4 k=2 r=3 rank-1 round trip", twisted_round_trip()),
        ("decoder agrees with exhaustive oracle", oracle_agreement()),
    ]
}
