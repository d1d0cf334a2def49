//! Seeded decode timing.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::{AnyCode, RankCode};
use crate::error::{Error, Result};
use crate::gabidulin::{GabidulinCode, Message};
use crate::gf::{Fe, GaloisField};
use crate::rank_metric::random_error;
use crate::twisted::{forbidden_norm, TwistedCode};

/// Seeded random η ≠ 0 with N(η) ≠ (−1)^{nk}. Fails over F_2, where the
/// norm of every nonzero element is 1 = (−1)^{nk}.
pub fn random_valid_eta(field: &GaloisField, k: usize, rng: &mut ChaCha8Rng) -> Result<Fe> {
    let q = field.characteristic();
    if q == 2 {
        return Err(Error::Domain(
            "no valid nonzero eta over F_2: N(eta) = 1 = (-1)^(nk) for every nonzero eta, \
             so any twist breaks the MRD property; use eta = 0"
                .into(),
        ));
    }
    let forbidden = forbidden_norm(q, field.degree(), k);
    loop {
        let eta = field.random_nonzero(rng);
        if field.norm_residue(eta) != forbidden {
            return Ok(eta);
        }
    }
}

/// The code used for timing at a given size: default modulus, power basis,
/// a seeded valid η (or η = 0 when `twisted` is false) and r = t + k mod n
/// with t = ⌊(n − k)/2⌋, so the ratio equation is a true quadratic.
pub fn timing_code(q: u32, n: usize, k: usize, twisted: bool, seed: u64) -> Result<AnyCode> {
    let field = GaloisField::new(q, n)?;
    if !twisted {
        return Ok(AnyCode::Gabidulin(GabidulinCode::new(field, k, None)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eta = random_valid_eta(&field, k, &mut rng)?;
    let t = n.checked_sub(k).map(|d| d / 2).unwrap_or(0);
    Ok(AnyCode::Twisted(TwistedCode::new(field, k, eta, (t + k) % n, None)?))
}

/// Decodes `trials` seeded random codewords hit by errors of rank
/// ⌊(n − k)/2⌋ and returns the median wall time of one decode. Every
/// decode is checked against the transmitted message.
pub fn median_decode_time(code: &AnyCode, trials: usize, seed: u64) -> Result<Duration> {
    let field = code.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut times = Vec::with_capacity(trials);
    for _ in 0..trials.max(1) {
        let msg = Message((0..code.k()).map(|_| field.random(&mut rng)).collect());
        let err = random_error(&field, code.max_radius(), &mut rng)?;
        let received = code.encode(&msg)?.add(&field, &err)?;
        let start = Instant::now();
        let decoded = code.decode(&received)?;
        times.push(start.elapsed());
        if decoded.as_ref() != Some(&msg) {
            return Err(Error::Domain("benchmark decode returned the wrong message".into()));
        }
    }
    times.sort();
    Ok(times[times.len() / 2])
}
