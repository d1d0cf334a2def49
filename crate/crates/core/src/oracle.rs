//! Brute-force ground truth for tiny parameters.
//!
//! Messages are enumerated by index: message number `m` has
//! f_i = element_at((m / Q^i) mod Q) with Q = q^n, so f_0 varies fastest.
//! Every search keeps the first minimum it meets, which makes results
//! independent of anything but the enumeration order.

use crate::code::RankCode;
use crate::error::{Error, Result};
use crate::gabidulin::Message;
use crate::rank_metric::{rank_distance, rank_norm, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_codewords: u64,
    pub max_field: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_codewords: 1_000_000,
            max_field: 1 << 20,
        }
    }
}

/// Result of an exhaustive nearest-codeword search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub message: Message,
    pub distance: usize,
    /// false when another message reaches the same distance
    pub unique: bool,
}

fn codebook_size<C: RankCode + ?Sized>(code: &C, budget: &OracleBudget) -> Result<u64> {
    let field = code.field();
    if field.order() > budget.max_field {
        return Err(Error::Budget {
            needed: field.order() as u128,
            limit: budget.max_field as u128,
        });
    }
    let size = (field.order() as u128).checked_pow(code.k() as u32);
    match size {
        Some(s) if s <= budget.max_codewords as u128 => Ok(s as u64),
        _ => Err(Error::Budget {
            needed: size.unwrap_or(u128::MAX),
            limit: budget.max_codewords as u128,
        }),
    }
}

/// Message number `index` in the oracle's enumeration order.
pub fn message_at<C: RankCode + ?Sized>(code: &C, mut index: u64) -> Message {
    let field = code.field();
    let order = field.order();
    Message(
        (0..code.k())
            .map(|_| {
                let e = field.element_at(index % order);
                index /= order;
                e
            })
            .collect(),
    )
}

pub fn oracle_nearest<C: RankCode + ?Sized>(code: &C, received: &Word, budget: &OracleBudget) -> Result<Nearest> {
    let total = codebook_size(code, budget)?;
    let field = code.field();
    let mut best: Option<(usize, u64)> = None;
    let mut ties = 0;
    for idx in 0..total {
        let c = code.encode(&message_at(code, idx))?;
        let d = rank_distance(field, &c, received)?;
        match best {
            Some((bd, _)) if d > bd => {}
            Some((bd, _)) if d == bd => ties += 1,
            _ => {
                best = Some((d, idx));
                ties = 0;
            }
        }
    }
    let (distance, idx) = best.expect("the codebook is never empty");
    Ok(Nearest {
        message: message_at(code, idx),
        distance,
        unique: ties == 0,
    })
}

/// Minimum rank of a nonzero codeword, with the first message attaining
/// it. For an F_q-linear code this is the minimum distance.
pub fn min_distance_witness<C: RankCode + ?Sized>(code: &C, budget: &OracleBudget) -> Result<(usize, Message)> {
    let total = codebook_size(code, budget)?;
    let field = code.field();
    let mut best = (usize::MAX, 0u64);
    for idx in 1..total {
        let c = code.encode(&message_at(code, idx))?;
        let w = rank_norm(field, &c);
        if w < best.0 {
            best = (w, idx);
            if w == 0 {
                break;
            }
        }
    }
    Ok((best.0, message_at(code, best.1)))
}

pub fn oracle_min_distance<C: RankCode + ?Sized>(code: &C, budget: &OracleBudget) -> Result<usize> {
    Ok(min_distance_witness(code, budget)?.0)
}

/// Whether the code meets the Singleton-like bound log_{q^n}(M) ≤ n − d + 1
/// with equality, i.e. k = n − d + 1 for M = q^{nk}.
pub fn oracle_singleton_check<C: RankCode + ?Sized>(code: &C, budget: &OracleBudget) -> Result<bool> {
    let d = oracle_min_distance(code, budget)?;
    Ok(code.k() + d == code.n() + 1)
}
