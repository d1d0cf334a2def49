//! Rank weight versus Hamming weight, and seeded errors of exact rank.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcode::gf::{Fe, GaloisField};
use rankcode::rank_metric::{rank_distance, rank_norm, random_error, Word};

fn main() -> rankcode::Result<()> {
    let f = GaloisField::new(2, 4)?;
    let b = f.generator();
    let w = Word(vec![f.one(), b, f.add(f.one(), b), Fe::ZERO]);
    println!("Hamming weight {} but rank weight {}", w.hamming_weight(), rank_norm(&f, &w));

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..=4 {
        let e = random_error(&f, t, &mut rng)?;
        let zero = Word::zero(4);
        println!("error of rank {t}: measured {}", rank_distance(&f, &e, &zero)?);
    }
    Ok(())
}
