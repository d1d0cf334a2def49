//! Compare the fast decoder against exhaustive nearest-codeword search.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcode::gabidulin::Message;
use rankcode::gf::GaloisField;
use rankcode::oracle::{oracle_nearest, OracleBudget};
use rankcode::rank_metric::random_error;
use rankcode::twisted::TwistedCode;

fn main() -> rankcode::Result<()> {
    let f = GaloisField::new(3, 4)?;
    let eta = f.elements()?.find(|&a| f.norm_residue(a) == 2).unwrap();
    let code = TwistedCode::new(f.clone(), 2, eta, 3, None)?;
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut agree = 0;
    let trials = 10;
    for _ in 0..trials {
        let msg = Message((0..2).map(|_| f.random(&mut rng)).collect());
        let received = code.encode(&msg)?.add(&f, &random_error(&f, 1, &mut rng)?)?;
        let truth = oracle_nearest(&code, &received, &budget)?;
        let fast = code.decode(&received)?;
        if truth.unique && fast == Some(truth.message) {
            agree += 1;
        }
    }
    println!("decoder matched the oracle on {agree}/{trials} words");
    Ok(())
}
