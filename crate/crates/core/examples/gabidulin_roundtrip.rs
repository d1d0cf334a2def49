//! Encode and decode with a classical Gabidulin code over F_256.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcode::gabidulin::{GabidulinCode, Message};
use rankcode::gf::GaloisField;
use rankcode::rank_metric::random_error;

fn main() -> rankcode::Result<()> {
    let f = GaloisField::new(2, 8)?;
    let code = GabidulinCode::new(f.clone(), 4, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("n = {}, k = {}, corrects rank <= {}", code.n(), code.k(), code.max_radius());

    for t in 0..=code.max_radius() {
        let msg = Message((0..code.k()).map(|_| f.random(&mut rng)).collect());
        let sent = code.encode(&msg)?;
        let received = sent.add(&f, &random_error(&f, t, &mut rng)?)?;
        let decoded = code.decode(&received)?;
        println!("rank {t} error: recovered = {}", decoded.as_ref() == Some(&msg));
    }
    Ok(())
}
