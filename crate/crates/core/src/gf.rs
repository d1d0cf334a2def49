//! Prime fields F_q and their degree-n extensions F_{q^n} = F_q[β]/(m(β)).
//!
//! Extension elements are stored as little-endian coordinate vectors in the
//! power basis 1, β, …, β^{n-1}. All digits are canonical residues in
//! `[0, q)`. The field handle is cheap to clone and carries the modulus
//! plus the matrices of the Frobenius powers x ↦ x^{q^i}.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Field;

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// Default cap on the number of elements [`GaloisField::elements`] will
/// enumerate without being forced.
pub const ENUMERATION_GUARD: u64 = 1 << 24;

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_q with elements represented as `u32` residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        fq_poly::pow(a, e, self.q)
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.q as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }
    fn try_inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.q as u64 - 2))
    }
}

// Polynomials over F_q, little-endian, used only to validate and pick moduli.
mod fq_poly {
    pub fn trim(p: &mut Vec<u32>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], q: u32) -> Vec<u32> {
        let q64 = q as u64;
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = pow(m[dm], q as u64 - 2, q) as u64;
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] as u64 * lead_inv % q64;
            let shift = top - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = c * mi as u64 % q64;
                r[shift + i] = ((r[shift + i] as u64 + q64 - sub) % q64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], q: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % q as u64;
            }
        }
        let p: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
        rem(&p, m, q)
    }

    pub fn pow_mod(a: &[u32], mut e: u64, m: &[u32], q: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut base = rem(a, m, q);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, m, q);
            }
            base = mul_mod(&base, &base, m, q);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u32], b: &[u32], q: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, q);
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(a: u32, mut e: u64, q: u32) -> u32 {
        let q64 = q as u64;
        let mut acc = 1u64;
        let mut base = a as u64 % q64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q64;
            }
            base = base * base % q64;
            e >>= 1;
        }
        acc as u32
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: a monic `m` of degree n is irreducible over F_q iff
/// x^{q^n} ≡ x (mod m) and gcd(x^{q^{n/p}} − x, m) = 1 for each prime p | n.
pub fn is_irreducible(modulus: &[u32], q: u32) -> bool {
    let n = modulus.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // powers[i] = x^{q^i} mod m
    let mut powers = vec![fq_poly::rem(&x, modulus, q)];
    for _ in 0..n {
        let last = powers.last().unwrap();
        powers.push(fq_poly::pow_mod(last, q as u64, modulus, q));
    }
    let minus_x = |p: &[u32]| {
        let mut v = p.to_vec();
        if v.len() < 2 {
            v.resize(2, 0);
        }
        v[1] = (v[1] + q - 1) % q;
        fq_poly::trim(&mut v);
        v
    };
    if !minus_x(&powers[n]).is_empty() {
        return false;
    }
    prime_factors(n).into_iter().all(|p| {
        let g = fq_poly::gcd(&minus_x(&powers[n / p]), modulus, q);
        g.len() == 1
    })
}

/// The first monic irreducible of degree n over F_q when candidates are
/// ordered by the integer Σ c_i q^i of their low coefficients
/// (c_0, …, c_{n-1}).
pub fn default_modulus(q: u32, n: usize) -> Result<Vec<u32>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut low = vec![0u32; n];
    loop {
        let mut cand = low.clone();
        cand.push(1);
        if is_irreducible(&cand, q) {
            return Ok(cand);
        }
        // increment the counter, c_0 fastest
        let mut i = 0;
        loop {
            if i == n {
                return Err(Error::Unsupported(format!(
                    "no irreducible of degree {n} over F_{q}"
                )));
            }
            low[i] += 1;
            if low[i] < q {
                break;
            }
            low[i] = 0;
            i += 1;
        }
    }
}

/// An element of F_{q^n}. Only meaningful together with the
/// [`GaloisField`] that produced it; digits past index n are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe {
    d: [u16; MAX_DEGREE],
}

impl Fe {
    pub const ZERO: Fe = Fe { d: [0; MAX_DEGREE] };

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|&x| x == 0)
    }

    /// Raw digit `i` (coefficient of β^i).
    pub fn digit(&self, i: usize) -> u32 {
        self.d[i] as u32
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.d.iter().rposition(|&x| x != 0).unwrap_or(0);
        f.debug_list().entries(&self.d[..=last]).finish()
    }
}

struct Inner {
    q: u32,
    n: usize,
    /// monic, length n + 1
    modulus: Vec<u32>,
    order: u64,
    /// frob[i][j] = (β^j)^{q^i}, i in 0..n
    frob: Vec<Vec<Fe>>,
}

/// The extension field F_{q^n}.
#[derive(Clone)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.q == other.inner.q && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("q", &self.inner.q)
            .field("n", &self.inner.n)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl GaloisField {
    /// Builds F_{q^n} with the default modulus.
    pub fn new(q: u32, n: usize) -> Result<Self> {
        Self::check_size(q, n)?;
        let modulus = default_modulus(q, n)?;
        Self::build(q, n, modulus)
    }

    /// Builds F_{q^n} from a user-supplied modulus (low degree first),
    /// validating that it is monic, of degree n, and irreducible.
    pub fn with_modulus(q: u32, n: usize, modulus: Vec<u32>) -> Result<Self> {
        Self::check_size(q, n)?;
        let mut m = modulus;
        fq_poly::trim(&mut m);
        if let Some(&digit) = m.iter().find(|&&c| c >= q) {
            return Err(Error::DigitOutOfRange { digit, q });
        }
        if m.len() != n + 1 {
            return Err(Error::ModulusDegree {
                expected: n,
                got: m.len().saturating_sub(1),
            });
        }
        if m[n] != 1 {
            return Err(Error::ModulusNotMonic);
        }
        if !is_irreducible(&m, q) {
            return Err(Error::ModulusReducible(q));
        }
        Self::build(q, n, m)
    }

    fn check_size(q: u32, n: usize) -> Result<()> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q > u16::MAX as u32 {
            return Err(Error::Unsupported(format!("q = {q} exceeds 65535")));
        }
        if !(2..=MAX_DEGREE).contains(&n) {
            return Err(Error::Unsupported(format!(
                "extension degree {n} outside 2..={MAX_DEGREE}"
            )));
        }
        let size = (q as u128).checked_pow(n as u32);
        if size.is_none_or(|s| s > (1u128 << 62)) {
            return Err(Error::Unsupported(format!("q^n = {q}^{n} is too large")));
        }
        Ok(())
    }

    fn build(q: u32, n: usize, modulus: Vec<u32>) -> Result<Self> {
        let order = (q as u64).pow(n as u32);
        let mut field = Self {
            inner: Arc::new(Inner {
                q,
                n,
                modulus,
                order,
                frob: Vec::new(),
            }),
        };
        let basis = field.power_basis();
        let mut frob = vec![basis.clone()];
        let first: Vec<Fe> = basis.iter().map(|&b| field.pow(b, q as u64)).collect();
        frob.push(first.clone());
        for i in 2..n {
            let prev = &frob[i - 1];
            // apply x ↦ x^q coordinate-wise through the first table
            let next = prev
                .iter()
                .map(|&v| Self::apply_table(q, n, &first, v))
                .collect();
            frob.push(next);
        }
        frob.truncate(n);
        Arc::get_mut(&mut field.inner).expect("fresh handle").frob = frob;
        Ok(field)
    }

    fn apply_table(q: u32, n: usize, table: &[Fe], a: Fe) -> Fe {
        let mut acc = [0u64; MAX_DEGREE];
        for (j, t) in table.iter().enumerate().take(n) {
            let c = a.d[j] as u64;
            if c == 0 {
                continue;
            }
            for (slot, &td) in acc.iter_mut().zip(&t.d[..n]) {
                *slot += c * td as u64;
            }
        }
        let mut out = Fe::ZERO;
        for i in 0..n {
            out.d[i] = (acc[i] % q as u64) as u16;
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.q
    }

    pub fn degree(&self) -> usize {
        self.inner.n
    }

    /// q^n.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField { q: self.inner.q }
    }

    /// Embeds a base-field residue.
    pub fn scalar(&self, c: u32) -> Fe {
        let mut e = Fe::ZERO;
        e.d[0] = (c % self.inner.q) as u16;
        e
    }

    pub fn one(&self) -> Fe {
        self.scalar(1)
    }

    /// The residue class β of x modulo the modulus.
    pub fn generator(&self) -> Fe {
        let mut e = Fe::ZERO;
        e.d[1] = 1;
        e
    }

    /// 1, β, …, β^{n-1}.
    pub fn power_basis(&self) -> Vec<Fe> {
        (0..self.inner.n)
            .map(|i| {
                let mut e = Fe::ZERO;
                e.d[i] = 1;
                e
            })
            .collect()
    }

    /// Whether `a` lies in the prime subfield.
    pub fn is_base(&self, a: Fe) -> bool {
        a.d[1..].iter().all(|&x| x == 0)
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        a.d[..self.inner.n].iter().map(|&x| x as u32).collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Fe> {
        if digits.len() != self.inner.n {
            return Err(Error::Shape {
                expected: self.inner.n,
                got: digits.len(),
            });
        }
        let mut e = Fe::ZERO;
        for (slot, &c) in e.d.iter_mut().zip(digits) {
            if c >= self.inner.q {
                return Err(Error::DigitOutOfRange {
                    digit: c,
                    q: self.inner.q,
                });
            }
            *slot = c as u16;
        }
        Ok(e)
    }

    /// Position of `a` in the enumeration order: Σ digit_i · q^i.
    pub fn index_of(&self, a: Fe) -> u64 {
        a.d[..self.inner.n]
            .iter()
            .rev()
            .fold(0u64, |acc, &x| acc * self.inner.q as u64 + x as u64)
    }

    /// Inverse of [`index_of`](Self::index_of); `index` must be below q^n.
    pub fn element_at(&self, mut index: u64) -> Fe {
        debug_assert!(index < self.inner.order);
        let q = self.inner.q as u64;
        let mut e = Fe::ZERO;
        for i in 0..self.inner.n {
            e.d[i] = (index % q) as u16;
            index /= q;
        }
        e
    }

    /// All q^n elements in increasing [`index_of`](Self::index_of) order:
    /// 0, 1, …, q−1, β, 1+β, … Refuses fields above [`ENUMERATION_GUARD`].
    pub fn elements(&self) -> Result<impl Iterator<Item = Fe> + '_> {
        self.elements_capped(ENUMERATION_GUARD)
    }

    pub fn elements_capped(&self, limit: u64) -> Result<impl Iterator<Item = Fe> + '_> {
        if self.inner.order > limit {
            return Err(Error::FieldTooLarge {
                size: self.inner.order as u128,
                limit: limit as u128,
            });
        }
        Ok((0..self.inner.order).map(move |i| self.element_at(i)))
    }

    /// Enumerates regardless of size.
    pub fn elements_forced(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.inner.order).map(move |i| self.element_at(i))
    }

    /// Uniformly random element.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let mut e = Fe::ZERO;
        for i in 0..self.inner.n {
            e.d[i] = rng.gen_range(0..self.inner.q) as u16;
        }
        e
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let e = self.random(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let q = self.inner.q;
        let mut out = Fe::ZERO;
        for i in 0..self.inner.n {
            let s = a.d[i] as u32 + b.d[i] as u32;
            out.d[i] = if s >= q { s - q } else { s } as u16;
        }
        out
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let q = self.inner.q;
        let mut out = Fe::ZERO;
        for i in 0..self.inner.n {
            out.d[i] = if a.d[i] == 0 { 0 } else { (q - a.d[i] as u32) as u16 };
        }
        out
    }

    /// Multiplies by a base-field residue.
    pub fn scale(&self, c: u32, a: Fe) -> Fe {
        let q = self.inner.q as u64;
        let c = c as u64 % q;
        let mut out = Fe::ZERO;
        for i in 0..self.inner.n {
            out.d[i] = (a.d[i] as u64 * c % q) as u16;
        }
        out
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let n = self.inner.n;
        let q = self.inner.q as u64;
        let m = &self.inner.modulus;
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..n {
            let x = a.d[i] as u64;
            if x == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] += x * b.d[j] as u64;
            }
        }
        for p in prod.iter_mut().take(2 * n - 1) {
            *p %= q;
        }
        // reduce β^d for d = 2n−2 … n using β^n = −Σ m_i β^i
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..n {
                let k = d - n + i;
                prod[k] = (prod[k] + c * (q - m[i] as u64)) % q;
            }
        }
        let mut out = Fe::ZERO;
        for i in 0..n {
            out.d[i] = prod[i] as u16;
        }
        out
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.inner.order - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^{q^i}; `i` is reduced mod n.
    pub fn frobenius(&self, a: Fe, i: usize) -> Fe {
        let i = i % self.inner.n;
        if i == 0 {
            return a;
        }
        Self::apply_table(self.inner.q, self.inner.n, &self.inner.frob[i], a)
    }

    /// Field norm N(a) = Π_{i<n} a^{q^i}, an element of F_q.
    pub fn norm(&self, a: Fe) -> Fe {
        (0..self.inner.n).fold(self.one(), |acc, i| self.mul(acc, self.frobenius(a, i)))
    }

    /// [`norm`](Self::norm) as a base-field residue.
    pub fn norm_residue(&self, a: Fe) -> u32 {
        let nm = self.norm(a);
        debug_assert!(self.is_base(nm));
        nm.digit(0)
    }

    /// Coordinates of `a` over F_q (same as its digits).
    pub fn coordinates(&self, a: Fe) -> Vec<u32> {
        self.digits(a)
    }
}

impl Field for GaloisField {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe::ZERO
    }
    fn one(&self) -> Fe {
        GaloisField::one(self)
    }
    fn add(&self, a: Fe, b: Fe) -> Fe {
        GaloisField::add(self, a, b)
    }
    fn sub(&self, a: Fe, b: Fe) -> Fe {
        GaloisField::sub(self, a, b)
    }
    fn mul(&self, a: Fe, b: Fe) -> Fe {
        GaloisField::mul(self, a, b)
    }
    fn neg(&self, a: Fe) -> Fe {
        GaloisField::neg(self, a)
    }
    fn try_inv(&self, a: Fe) -> Option<Fe> {
        self.inv(a).ok()
    }
    fn is_zero(&self, a: Fe) -> bool {
        a.is_zero()
    }
}
