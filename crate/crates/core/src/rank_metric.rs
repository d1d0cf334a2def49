//! Rank norm and rank distance on words over F_{q^n}, plus sampling of
//! errors of an exact prescribed rank.

use std::ops::Deref;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::{self, Matrix};
use crate::linpoly::fq_rank;

/// A vector over F_{q^n}: a codeword, an error, or a received word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Fe>);

impl Word {
    pub fn zero(len: usize) -> Self {
        Word(vec![Fe::ZERO; len])
    }

    pub fn entries(&self) -> &[Fe] {
        &self.0
    }

    pub fn add(&self, field: &GaloisField, other: &Word) -> Result<Word> {
        check_len(self, other)?;
        Ok(Word(
            self.0.iter().zip(&other.0).map(|(&a, &b)| field.add(a, b)).collect(),
        ))
    }

    pub fn sub(&self, field: &GaloisField, other: &Word) -> Result<Word> {
        check_len(self, other)?;
        Ok(Word(
            self.0.iter().zip(&other.0).map(|(&a, &b)| field.sub(a, b)).collect(),
        ))
    }

    /// Entry-wise multiple c · w for c ∈ F_{q^n}.
    pub fn scale(&self, field: &GaloisField, c: Fe) -> Word {
        Word(self.0.iter().map(|&a| field.mul(c, a)).collect())
    }

    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }
}

impl Deref for Word {
    type Target = [Fe];
    fn deref(&self) -> &[Fe] {
        &self.0
    }
}

impl From<Vec<Fe>> for Word {
    fn from(v: Vec<Fe>) -> Self {
        Word(v)
    }
}

fn check_len(a: &Word, b: &Word) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Shape {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

/// Dimension over F_q of the span of the entries of `v`.
pub fn rank_norm(field: &GaloisField, v: &[Fe]) -> usize {
    fq_rank(field, v)
}

/// rank_norm(x − y).
pub fn rank_distance(field: &GaloisField, x: &Word, y: &Word) -> Result<usize> {
    Ok(rank_norm(field, &x.sub(field, y)?))
}

/// Samples a word of length n = [F_{q^n} : F_q] whose rank is exactly `t`:
/// e = (u_1 … u_t) · M with F_q-independent u_i and a rank-t matrix M over
/// F_q, both redrawn until they are full rank.
pub fn random_error<R: Rng + ?Sized>(field: &GaloisField, t: usize, rng: &mut R) -> Result<Word> {
    let n = field.degree();
    if t > n {
        return Err(Error::Domain(format!("error rank {t} outside 0..={n}")));
    }
    if t == 0 {
        return Ok(Word::zero(n));
    }
    let support = loop {
        let u: Vec<Fe> = (0..t).map(|_| field.random(rng)).collect();
        if fq_rank(field, &u) == t {
            break u;
        }
    };
    let fq = field.prime_field();
    let q = field.characteristic();
    let mixing = loop {
        let m = Matrix::from_rows(
            (0..t)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
                .collect(),
        );
        if linalg::rank(&fq, &m) == t {
            break m;
        }
    };
    Ok(Word(
        (0..n)
            .map(|j| {
                support.iter().enumerate().fold(Fe::ZERO, |acc, (i, &u)| {
                    field.add(acc, field.scale(mixing[(i, j)], u))
                })
            })
            .collect(),
    ))
}
