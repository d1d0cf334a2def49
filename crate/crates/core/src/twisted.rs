//! Twisted Gabidulin codes 𝒢(η, r).
//!
//! A message (f_0, …, f_{k−1}) is mapped to the linearized polynomial
//!
//! ```text
//! f(x) = f_0 x + f_1 x^q + … + f_{k−1} x^{q^{k−1}} + η f_0^{q^r} x^{q^k}
//! ```
//!
//! and encoded as (f(α_1), …, f(α_n)). The code is MRD whenever
//! N(η) ≠ (−1)^{nk}; for r ≠ 0 and η ≠ 0 it is F_q-linear but not
//! F_{q^n}-linear, so a plain Gabidulin decoder does not apply.
//!
//! Decoding, for each radius t from ⌊(n − k)/2⌋ down to 0:
//!
//! 1. solve the interpolation system P_1(α_i) = P_2(r_i);
//! 2. try the left quotient P_1 / P_2 for each nullspace basis vector;
//! 3. otherwise use two independent solutions: P_1 − P_2 ∘ f is a multiple
//!    of one fixed subspace polynomial h, so the ratio of its extreme
//!    coefficients (a_0 − b_0 f_0) / (a_{n−t} − b_{n−t−k} η^{q^{n−t−k}}
//!    f_0^{q^s}) with s = r + n − t − k (mod n) agrees for both, which pins
//!    down f_0 (a quadratic when s = 0);
//! 4. strip f_0 x + η f_0^{q^r} x^{q^k} from the received word and decode
//!    the rest with a Gabidulin code of dimension k − 1 on the points α_j^q.
//!
//! Every candidate is accepted only after re-encoding and checking its rank
//! distance to the received word.

use crate::error::{Error, Result};
use crate::gabidulin::{check_basis, interpolation_basis, interpolation_system, GabidulinCode, InterpolationPair, Message};
use crate::gf::{Fe, GaloisField};
use crate::linalg::{self, Matrix};
use crate::linpoly::LinPoly;
use crate::rank_metric::{rank_distance, rank_norm, Word};

/// Default cap on field size for the exhaustive f_0 scan.
pub const DEFAULT_SCAN_LIMIT: u64 = 1 << 20;

/// (−1)^{nk} reduced into [0, q).
pub fn forbidden_norm(q: u32, n: usize, k: usize) -> u32 {
    if (n * k).is_multiple_of(2) {
        1
    } else {
        q - 1
    }
}

/// How a decoded message was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodePath {
    /// exact left division P_1 = P_2 ∘ f
    Division,
    /// f_0 from the quadratic ratio equation, rest by Gabidulin decoding
    Quadratic,
    /// f_0 from an exhaustive scan of the field
    Scan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub message: Message,
    /// radius t at which the message was accepted
    pub radius: usize,
    pub path: DecodePath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCode {
    field: GaloisField,
    k: usize,
    eta: Fe,
    r: usize,
    alpha: Vec<Fe>,
    /// dimension k − 1 code on α_j^q, absent when k = 1
    inner: Option<GabidulinCode>,
    scan_limit: u64,
}

impl TwistedCode {
    /// Builds 𝒢(η, r) evaluated at `alpha` (default: the power basis).
    /// Rejects η ≠ 0 with N(η) = (−1)^{nk}; over F_2 that is every nonzero η.
    pub fn new(field: GaloisField, k: usize, eta: Fe, r: usize, alpha: Option<Vec<Fe>>) -> Result<Self> {
        if !eta.is_zero() {
            let q = field.characteristic();
            let norm = field.norm_residue(eta);
            let forbidden = forbidden_norm(q, field.degree(), k);
            if norm == forbidden {
                return Err(Error::NotMrd { norm, forbidden, q });
            }
        }
        Self::new_unvalidated(field, k, eta, r, alpha)
    }

    /// Same as [`new`](Self::new) but skips the norm condition, so the
    /// result need not be MRD. Shape checks still apply.
    pub fn new_unvalidated(
        field: GaloisField,
        k: usize,
        eta: Fe,
        r: usize,
        alpha: Option<Vec<Fe>>,
    ) -> Result<Self> {
        let n = field.degree();
        if k == 0 || k >= n {
            return Err(Error::Domain(format!("dimension k = {k} outside 1..{n}")));
        }
        if r >= n {
            return Err(Error::Domain(format!("twist exponent r = {r} outside 0..{n}")));
        }
        let alpha = alpha.unwrap_or_else(|| field.power_basis());
        check_basis(&field, &alpha)?;
        let inner = if k > 1 {
            let shifted = alpha.iter().map(|&a| field.frobenius(a, 1)).collect();
            Some(GabidulinCode::new(field.clone(), k - 1, Some(shifted))?)
        } else {
            None
        };
        Ok(Self {
            field,
            k,
            eta,
            r,
            alpha,
            inner,
            scan_limit: DEFAULT_SCAN_LIMIT,
        })
    }

    /// Caps the field size for the exhaustive f_0 scan.
    pub fn with_scan_limit(mut self, limit: u64) -> Self {
        self.scan_limit = limit;
        self
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

    pub fn eta(&self) -> Fe {
        self.eta
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn alpha(&self) -> &[Fe] {
        &self.alpha
    }

    /// ⌊(n − k)/2⌋.
    pub fn max_radius(&self) -> usize {
        (self.n() - self.k) / 2
    }

    fn check_msg(&self, msg: &Message) -> Result<()> {
        if msg.len() != self.k {
            return Err(Error::Shape {
                expected: self.k,
                got: msg.len(),
            });
        }
        Ok(())
    }

    pub fn message_poly(&self, msg: &Message) -> Result<LinPoly> {
        self.check_msg(msg)?;
        let mut coeffs = msg.0.clone();
        coeffs.push(self.field.mul(self.eta, self.field.frobenius(msg[0], self.r)));
        Ok(LinPoly::from_coeffs(coeffs))
    }

    pub fn encode(&self, msg: &Message) -> Result<Word> {
        let f = self.message_poly(msg)?;
        Ok(Word(self.alpha.iter().map(|&a| f.eval(&self.field, a)).collect()))
    }

    /// The n × (2n − 2t − k + 2) interpolation system for radius t.
    pub fn build_interpolation_system(&self, received: &Word, t: usize) -> Result<Matrix<Fe>> {
        interpolation_system(&self.field, &self.alpha, received, self.k, t)
    }

    pub fn decode(&self, received: &Word) -> Result<Option<Message>> {
        Ok(self.decode_detailed(received)?.map(|d| d.message))
    }

    pub fn decode_detailed(&self, received: &Word) -> Result<Option<Decoded>> {
        if received.len() != self.n() {
            return Err(Error::Shape {
                expected: self.n(),
                got: received.len(),
            });
        }
        for t in (0..=self.max_radius()).rev() {
            if let Some(d) = self.decode_at(received, t)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// One pass of the four steps at a fixed radius.
    pub fn decode_at(&self, received: &Word, t: usize) -> Result<Option<Decoded>> {
        let basis = interpolation_basis(&self.field, &self.alpha, received, self.k, t)?;
        if let Some(message) = self.division_step(received, t, &basis)? {
            return Ok(Some(Decoded {
                message,
                radius: t,
                path: DecodePath::Division,
            }));
        }
        let (candidates, path) = self.f0_candidates(t, &basis)?;
        for f0 in candidates {
            if let Some(message) = self.strip_and_decode(received, t, f0)? {
                return Ok(Some(Decoded {
                    message,
                    radius: t,
                    path,
                }));
            }
        }
        Ok(None)
    }

    /// Step II: left-divide P_1 by P_2 for each basis solution and keep a
    /// quotient of twisted shape whose codeword is within rank distance t.
    pub fn division_step(&self, received: &Word, t: usize, basis: &[Vec<Fe>]) -> Result<Option<Message>> {
        let f = &self.field;
        for raw in basis {
            let pair = InterpolationPair::split(raw.clone(), self.n(), t);
            if pair.p2.is_zero() {
                continue;
            }
            let (quot, rem) = pair.p1.divide_left(f, &pair.p2)?;
            if !rem.is_zero() || quot.qdeg().is_some_and(|d| d > self.k) {
                continue;
            }
            let twist = f.mul(self.eta, f.frobenius(quot.coeff(0), self.r));
            if quot.coeff(self.k) != twist {
                continue;
            }
            let msg = Message((0..self.k).map(|i| quot.coeff(i)).collect());
            if rank_distance(f, &self.encode(&msg)?, received)? <= t {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    }

    /// s = r + n − t − k (mod n): the Frobenius exponent on f_0 in the top
    /// coefficient of P_1 − P_2 ∘ f.
    pub fn ratio_exponent(&self, t: usize) -> usize {
        (self.r + self.n() - t - self.k) % self.n()
    }

    /// Step III: candidate values of f_0 that satisfy the ratio identity
    /// for every pair of basis solutions.
    pub fn f0_candidates(&self, t: usize, basis: &[Vec<Fe>]) -> Result<(Vec<Fe>, DecodePath)> {
        let f = &self.field;
        let n = self.n();
        let top_a = n - t;
        let top_b = n - t - self.k;
        let eta_shift = f.frobenius(self.eta, top_b);
        let s = self.ratio_exponent(t);
        let b_off = top_a + 1;
        // (a_0, b_0, a_{n−t}, b_{n−t−k} η^{q^{n−t−k}}) for each solution
        let ends: Vec<[Fe; 4]> = basis
            .iter()
            .map(|v| [v[0], v[b_off], v[top_a], f.mul(v[b_off + top_b], eta_shift)])
            .collect();
        let pairs: Vec<(usize, usize)> = (0..ends.len())
            .flat_map(|i| (i + 1..ends.len()).map(move |j| (i, j)))
            .collect();
        // (a_0 − b_0 z)(a'_N − B' φ(z)) − (a'_0 − b'_0 z)(a_N − B φ(z)) = 0
        let identity_holds = |z: Fe, phi: Fe, &(i, j): &(usize, usize)| {
            let [a0, b0, an, bn] = ends[i];
            let [c0, d0, cn, dn] = ends[j];
            let lhs = f.mul(f.sub(a0, f.mul(b0, z)), f.sub(cn, f.mul(dn, phi)));
            let rhs = f.mul(f.sub(c0, f.mul(d0, z)), f.sub(an, f.mul(bn, phi)));
            lhs == rhs
        };

        if s == 0 {
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                let [a0, b0, an, bn] = ends[i];
                let [c0, d0, cn, dn] = ends[j];
                let c2 = f.sub(f.mul(b0, dn), f.mul(d0, bn));
                let c1 = f.sub(
                    f.add(f.mul(d0, an), f.mul(c0, bn)),
                    f.add(f.mul(a0, dn), f.mul(b0, cn)),
                );
                let c0_ = f.sub(f.mul(a0, cn), f.mul(c0, an));
                if c2.is_zero() && c1.is_zero() && c0_.is_zero() {
                    continue;
                }
                let roots = solve_quadratic(f, c2, c1, c0_)?;
                let filtered = roots
                    .into_iter()
                    .filter(|&z| pairs[idx + 1..].iter().all(|p| identity_holds(z, z, p)))
                    .collect();
                return Ok((filtered, DecodePath::Quadratic));
            }
        }
        // s ≠ 0, or every pair was degenerate: scan the whole field
        let all = self.field.elements_capped(self.scan_limit)?;
        let found = all
            .filter(|&z| {
                let phi = f.frobenius(z, s);
                pairs.iter().all(|p| identity_holds(z, phi, p))
            })
            .collect();
        Ok((found, DecodePath::Scan))
    }

    /// Step IV: remove f_0 x + η f_0^{q^r} x^{q^k}, decode the remainder as a
    /// Gabidulin word g(α_j^q) + e_j, and verify the reassembled message.
    pub fn strip_and_decode(&self, received: &Word, t: usize, f0: Fe) -> Result<Option<Message>> {
        let f = &self.field;
        let twist = f.mul(self.eta, f.frobenius(f0, self.r));
        let stripped = Word(
            received
                .iter()
                .zip(&self.alpha)
                .map(|(&rj, &a)| {
                    let known = f.add(f.mul(f0, a), f.mul(twist, f.frobenius(a, self.k)));
                    f.sub(rj, known)
                })
                .collect(),
        );
        let msg = match &self.inner {
            None => {
                if rank_norm(f, &stripped) > t {
                    return Ok(None);
                }
                Message(vec![f0])
            }
            Some(inner) => match inner.decode_at(&stripped, t)? {
                Some(g) => {
                    let mut coeffs = vec![f0];
                    coeffs.extend_from_slice(&g);
                    Message(coeffs)
                }
                None => return Ok(None),
            },
        };
        if rank_distance(f, &self.encode(&msg)?, received)? <= t {
            Ok(Some(msg))
        } else {
            Ok(None)
        }
    }
}

/// All roots in F_{q^n} of c2 z² + c1 z + c0, without repetition and in
/// enumeration order.
///
/// Odd characteristic uses the quadratic formula with a Tonelli–Shanks
/// square root; characteristic 2 reduces to the F_2-linear equation
/// w² + w = δ.
pub fn solve_quadratic(field: &GaloisField, c2: Fe, c1: Fe, c0: Fe) -> Result<Vec<Fe>> {
    let f = field;
    if c2.is_zero() && c1.is_zero() && c0.is_zero() {
        return Err(Error::Domain("all-zero quadratic".into()));
    }
    if c2.is_zero() {
        if c1.is_zero() {
            return Ok(Vec::new());
        }
        return Ok(vec![f.neg(f.div(c0, c1)?)]);
    }
    let inv2 = f.inv(c2)?;
    let b = f.mul(c1, inv2);
    let c = f.mul(c0, inv2);
    let mut roots = if f.characteristic() == 2 {
        char2_roots(f, b, c)
    } else {
        let four_c = f.scale(4, c);
        let disc = f.sub(f.mul(b, b), four_c);
        let half = f.inv(f.scalar(2))?;
        match sqrt(f, disc) {
            None => Vec::new(),
            Some(s) => {
                let nb = f.neg(b);
                vec![f.mul(f.add(nb, s), half), f.mul(f.sub(nb, s), half)]
            }
        }
    };
    roots.sort_by_key(|&z| f.index_of(z));
    roots.dedup();
    Ok(roots)
}

/// z² + b z + c = 0 over F_{2^n}.
fn char2_roots(f: &GaloisField, b: Fe, c: Fe) -> Vec<Fe> {
    let n = f.degree();
    if b.is_zero() {
        // squaring is a bijection; its inverse is x ↦ x^{2^{n−1}}
        return vec![f.frobenius(c, n - 1)];
    }
    // z = b w turns it into w² + w = c / b²
    let delta = f.mul(c, f.inv(f.mul(b, b)).expect("b is nonzero"));
    let fq = f.prime_field();
    let mut m = Matrix::filled(n, n + 1, 0u32);
    for (j, basis) in f.power_basis().into_iter().enumerate() {
        let image = f.add(f.mul(basis, basis), basis);
        for (i, d) in f.digits(image).into_iter().enumerate() {
            m[(i, j)] = d;
        }
    }
    for (i, d) in f.digits(delta).into_iter().enumerate() {
        m[(i, n)] = d;
    }
    let pivots = linalg::rref(&fq, &mut m);
    if pivots.last() == Some(&n) {
        return Vec::new();
    }
    let mut w = vec![0u32; n];
    for (row, &p) in pivots.iter().enumerate() {
        w[p] = m[(row, n)];
    }
    let w = f.from_digits(&w).expect("digits in range");
    let z = f.mul(b, w);
    // the other solution is w + 1
    vec![z, f.add(z, b)]
}

/// A square root of `a` in F_{q^n} for odd q, if one exists.
pub fn sqrt(f: &GaloisField, a: Fe) -> Option<Fe> {
    if a.is_zero() {
        return Some(a);
    }
    let order = f.order();
    let one = f.one();
    if f.pow(a, (order - 1) / 2) != one {
        return None;
    }
    // order − 1 = 2^e · m, m odd
    let mut m = order - 1;
    let mut e = 0u32;
    while m.is_multiple_of(2) {
        m /= 2;
        e += 1;
    }
    let non_residue = f
        .elements_forced()
        .skip(1)
        .find(|&z| f.pow(z, (order - 1) / 2) != one)
        .expect("a non-residue exists in odd characteristic");
    let mut c = f.pow(non_residue, m);
    let mut x = f.pow(a, m.div_ceil(2));
    let mut t = f.pow(a, m);
    let mut e_cur = e;
    while t != one {
        let mut i = 0;
        let mut t2 = t;
        while t2 != one {
            t2 = f.mul(t2, t2);
            i += 1;
        }
        let mut b = c;
        for _ in 0..e_cur - i - 1 {
            b = f.mul(b, b);
        }
        x = f.mul(x, b);
        c = f.mul(b, b);
        t = f.mul(t, c);
        e_cur = i;
    }
    Some(x)
}
