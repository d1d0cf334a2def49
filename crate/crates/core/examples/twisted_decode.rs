//! A twisted code over F_81: pick a valid twist, encode, corrupt, decode,
//! and report which decoding path fired.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcode::gabidulin::Message;
use rankcode::gf::GaloisField;
use rankcode::rank_metric::random_error;
use rankcode::twisted::{forbidden_norm, TwistedCode};

fn main() -> rankcode::Result<()> {
    let (q, n, k) = (3, 4, 2);
    let f = GaloisField::new(q, n)?;
    let bad = forbidden_norm(q, n, k);
    let eta = f.elements()?.find(|&a| !a.is_zero() && f.norm_residue(a) != bad).unwrap();
    println!("eta = {:?}, N(eta) = {}, forbidden norm = {bad}", f.digits(eta), f.norm_residue(eta));

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in 0..n {
        let code = TwistedCode::new(f.clone(), k, eta, r, None)?;
        let msg = Message((0..k).map(|_| f.random(&mut rng)).collect());
        let received = code.encode(&msg)?.add(&f, &random_error(&f, 1, &mut rng)?)?;
        match code.decode_detailed(&received)? {
            Some(d) => println!("r = {r}: ok = {}, t = {}, path = {:?}", d.message == msg, d.radius, d.path),
            None => println!("r = {r}: decoding failure"),
        }
    }

    let eta_bad = f.elements()?.find(|&a| !a.is_zero() && f.norm_residue(a) == bad).unwrap();
    if let Err(e) = TwistedCode::new(f, k, eta_bad, 3, None) {
        println!("rejected: {e}");
    }
    Ok(())
}
