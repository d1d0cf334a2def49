//! Classical Gabidulin codes: evaluations of linearized polynomials of
//! q-degree below k at an F_q-basis of F_{q^n}, decoded by interpolation.
//!
//! The interpolation decoder looks for a pair (P_1, P_2) of q-degrees at
//! most n − t and n − t − k with P_1(α_i) = P_2(r_i) for every position i.
//! Whenever the error rank is at most t, P_1 − P_2 ∘ f vanishes on an
//! (n − t)-dimensional space, which forces P_1 = P_2 ∘ f for suitable
//! solutions, and f is then a left quotient.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::{self, Matrix};
use crate::linpoly::{moore_determinant, LinPoly};
use crate::rank_metric::{rank_distance, Word};

/// Message coefficients (f_0, …, f_{k−1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Message(pub Vec<Fe>);

impl Message {
    pub fn zero(k: usize) -> Self {
        Message(vec![Fe::ZERO; k])
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }
}

impl Deref for Message {
    type Target = [Fe];
    fn deref(&self) -> &[Fe] {
        &self.0
    }
}

impl From<Vec<Fe>> for Message {
    fn from(v: Vec<Fe>) -> Self {
        Message(v)
    }
}

/// Checks that `alpha` has n entries forming an F_q-basis of F_{q^n}.
pub(crate) fn check_basis(field: &GaloisField, alpha: &[Fe]) -> Result<()> {
    let n = field.degree();
    if alpha.len() != n {
        return Err(Error::Shape {
            expected: n,
            got: alpha.len(),
        });
    }
    if moore_determinant(field, alpha, n)?.is_zero() {
        return Err(Error::Domain(
            "evaluation points are not a basis of F_{q^n} over F_q".into(),
        ));
    }
    Ok(())
}

/// The n × (2n − 2t − k + 2) system P_1(α_i) − P_2(r_i) = 0. Columns hold
/// the unknowns a_0 … a_{n−t} followed by b_0 … b_{n−t−k}.
pub fn interpolation_system(
    field: &GaloisField,
    alpha: &[Fe],
    received: &[Fe],
    k: usize,
    t: usize,
) -> Result<Matrix<Fe>> {
    let n = alpha.len();
    if received.len() != n {
        return Err(Error::Shape {
            expected: n,
            got: received.len(),
        });
    }
    // underdetermined iff 2n − 2t − k + 2 > n
    if t + k > n || 2 * t + k >= n + 2 {
        return Err(Error::Domain(format!(
            "radius {t} too large for an interpolation system with n = {n}, k = {k}"
        )));
    }
    let a_len = n - t + 1;
    let b_len = n - t - k + 1;
    Ok(Matrix::from_rows(
        alpha
            .iter()
            .zip(received)
            .map(|(&a, &r)| {
                (0..a_len)
                    .map(|j| field.frobenius(a, j))
                    .chain((0..b_len).map(|j| field.neg(field.frobenius(r, j))))
                    .collect()
            })
            .collect(),
    ))
}

/// One solution of the interpolation system, split into its two polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationPair {
    pub p1: LinPoly,
    pub p2: LinPoly,
    /// the raw unknown vector (a_0 … a_{n−t}, b_0 … b_{n−t−k})
    pub raw: Vec<Fe>,
}

impl InterpolationPair {
    pub fn split(raw: Vec<Fe>, n: usize, t: usize) -> Self {
        let a_len = n - t + 1;
        Self {
            p1: LinPoly::from_coeffs(raw[..a_len].to_vec()),
            p2: LinPoly::from_coeffs(raw[a_len..].to_vec()),
            raw,
        }
    }
}

/// Nullspace basis of the interpolation system, as raw vectors.
pub fn interpolation_basis(
    field: &GaloisField,
    alpha: &[Fe],
    received: &[Fe],
    k: usize,
    t: usize,
) -> Result<Vec<Vec<Fe>>> {
    let system = interpolation_system(field, alpha, received, k, t)?;
    Ok(linalg::nullspace(field, &system))
}

/// Candidate solutions for the division step: the basis vectors themselves,
/// then, for each ordered pair, the combination that cancels the top
/// coefficient a_{n−t}.
pub(crate) fn division_candidates(
    field: &GaloisField,
    basis: &[Vec<Fe>],
    n: usize,
    t: usize,
) -> Vec<InterpolationPair> {
    let top = n - t;
    let mut out: Vec<InterpolationPair> = basis
        .iter()
        .map(|v| InterpolationPair::split(v.clone(), n, t))
        .collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (u, v) = (&basis[i], &basis[j]);
            if u[top].is_zero() && v[top].is_zero() {
                continue;
            }
            // v_top · u − u_top · v
            let combo: Vec<Fe> = u
                .iter()
                .zip(v)
                .map(|(&x, &y)| field.sub(field.mul(v[top], x), field.mul(u[top], y)))
                .collect();
            if combo.iter().any(|c| !c.is_zero()) {
                out.push(InterpolationPair::split(combo, n, t));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabidulinCode {
    field: GaloisField,
    k: usize,
    alpha: Vec<Fe>,
}

impl GabidulinCode {
    /// `alpha` defaults to the power basis 1, β, …, β^{n−1}.
    pub fn new(field: GaloisField, k: usize, alpha: Option<Vec<Fe>>) -> Result<Self> {
        let n = field.degree();
        if k == 0 || k >= n {
            return Err(Error::Domain(format!("dimension k = {k} outside 1..{n}")));
        }
        let alpha = alpha.unwrap_or_else(|| field.power_basis());
        check_basis(&field, &alpha)?;
        Ok(Self { field, k, alpha })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Fe] {
        &self.alpha
    }

    /// ⌊(n − k)/2⌋.
    pub fn max_radius(&self) -> usize {
        (self.n() - self.k) / 2
    }

    pub fn message_poly(&self, msg: &Message) -> Result<LinPoly> {
        if msg.len() != self.k {
            return Err(Error::Shape {
                expected: self.k,
                got: msg.len(),
            });
        }
        Ok(LinPoly::from_coeffs(msg.0.clone()))
    }

    pub fn encode(&self, msg: &Message) -> Result<Word> {
        let f = self.message_poly(msg)?;
        Ok(Word(self.alpha.iter().map(|&a| f.eval(&self.field, a)).collect()))
    }

    /// Decodes up to ⌊(n − k)/2⌋ rank errors. `Ok(None)` means no codeword
    /// was found and verified.
    pub fn decode(&self, received: &Word) -> Result<Option<Message>> {
        Ok(self
            .decode_within(received, self.max_radius())?
            .map(|(m, _)| m))
    }

    /// Tries radii t = `radius`, …, 0 and returns the first message whose
    /// codeword lies within rank distance t of `received`, with that t.
    pub fn decode_within(&self, received: &Word, radius: usize) -> Result<Option<(Message, usize)>> {
        let n = self.n();
        if received.len() != n {
            return Err(Error::Shape {
                expected: n,
                got: received.len(),
            });
        }
        for t in (0..=radius.min(self.max_radius())).rev() {
            if let Some(msg) = self.decode_at(received, t)? {
                return Ok(Some((msg, t)));
            }
        }
        Ok(None)
    }

    /// One interpolation pass at exactly radius t.
    pub fn decode_at(&self, received: &Word, t: usize) -> Result<Option<Message>> {
        let n = self.n();
        if t > self.max_radius() {
            return Ok(None);
        }
        let basis = interpolation_basis(&self.field, &self.alpha, received, self.k, t)?;
        for pair in division_candidates(&self.field, &basis, n, t) {
            if pair.p2.is_zero() {
                continue;
            }
            let (quot, rem) = pair.p1.divide_left(&self.field, &pair.p2)?;
            if !rem.is_zero() || quot.qdeg().is_some_and(|d| d >= self.k) {
                continue;
            }
            let msg = Message((0..self.k).map(|i| quot.coeff(i)).collect());
            if rank_distance(&self.field, &self.encode(&msg)?, received)? <= t {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    }
}
