//! Linearized polynomials c_0 x + c_1 x^q + … + c_m x^{q^m} over F_{q^n}.
//!
//! Multiplication in this ring is composition, governed by
//! `a x^{q^i} ∘ b x^{q^j} = a b^{q^i} x^{q^{i+j}}`, so the ring is not
//! commutative and division comes in a left and a right flavour.
//! Polynomials are kept formally: x^{q^n} is *not* identified with x.

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField, PrimeField};
use crate::linalg::{self, Matrix};

/// A linearized polynomial, always normalized (no trailing zero
/// coefficients; the zero polynomial has no coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinPoly {
    coeffs: Vec<Fe>,
}

impl LinPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The identity map x.
    pub fn identity(field: &GaloisField) -> Self {
        Self::monomial(field.one(), 0)
    }

    /// c · x^{q^i}.
    pub fn monomial(c: Fe, i: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; i + 1];
        coeffs[i] = c;
        Self::from_coeffs(coeffs)
    }

    /// `coeffs[i]` is the coefficient of x^{q^i}.
    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(Fe::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of x^{q^i}, zero beyond the q-degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, which sorts below every degree.
    pub fn qdeg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, field: &GaloisField, x: Fe) -> Fe {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Fe::ZERO, |acc, (i, &c)| {
                field.add(acc, field.mul(c, field.frobenius(x, i)))
            })
    }

    pub fn add(&self, field: &GaloisField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..len)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &GaloisField, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn neg(&self, field: &GaloisField) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect(),
        }
    }

    /// Left scalar multiple c · f.
    pub fn scale(&self, field: &GaloisField, c: Fe) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| field.mul(c, a)).collect())
    }

    /// The composition `self ∘ other`.
    pub fn compose(&self, field: &GaloisField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = field.mul(a, field.frobenius(b, i));
                out[i + j] = field.add(out[i + j], term);
            }
        }
        Self::from_coeffs(out)
    }

    /// Returns `(quot, rem)` with `self = divisor ∘ quot + rem` and
    /// `qdeg(rem) < qdeg(divisor)`.
    ///
    /// Cancelling the top term needs a q^d-th root, which on F_{q^n} is the
    /// Frobenius power x ↦ x^{q^{n−d}}.
    pub fn divide_left(&self, field: &GaloisField, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.qdeg().ok_or(Error::DivisionByZero)?;
        let n = field.degree();
        let lead_inv = field.inv(divisor.coeff(d))?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; self.coeffs.len().saturating_sub(d)];
        while let Some(m) = LinPoly::top(&rem) {
            if m < d {
                break;
            }
            let j = m - d;
            // divisor_d · u^{q^d} = rem_m
            let u = field.frobenius(field.mul(rem[m], lead_inv), n - d % n);
            quot[j] = u;
            for (i, &g) in divisor.coeffs.iter().enumerate() {
                let t = field.mul(g, field.frobenius(u, i));
                rem[i + j] = field.sub(rem[i + j], t);
            }
            debug_assert!(rem[m].is_zero());
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Returns `(quot, rem)` with `self = quot ∘ divisor + rem` and
    /// `qdeg(rem) < qdeg(divisor)`.
    pub fn divide_right(&self, field: &GaloisField, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.qdeg().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeff(d);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; self.coeffs.len().saturating_sub(d)];
        while let Some(m) = LinPoly::top(&rem) {
            if m < d {
                break;
            }
            let j = m - d;
            // u · divisor_d^{q^j} = rem_m
            let u = field.div(rem[m], field.frobenius(lead, j))?;
            quot[j] = u;
            for (i, &g) in divisor.coeffs.iter().enumerate() {
                let t = field.mul(u, field.frobenius(g, j));
                rem[i + j] = field.sub(rem[i + j], t);
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    fn top(coeffs: &[Fe]) -> Option<usize> {
        coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// An F_q-basis of the root space {x ∈ F_{q^n} : f(x) = 0}.
    pub fn kernel(&self, field: &GaloisField) -> Result<Vec<Fe>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = field.degree();
        let images: Vec<Vec<u32>> = field
            .power_basis()
            .into_iter()
            .map(|b| field.digits(self.eval(field, b)))
            .collect();
        // column j holds the coordinates of f(β^j)
        let mut m = Matrix::filled(n, n, 0u32);
        for (j, img) in images.iter().enumerate() {
            for (i, &c) in img.iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        let fq = field.prime_field();
        linalg::nullspace(&fq, &m)
            .into_iter()
            .map(|v| field.from_digits(&v))
            .collect()
    }
}

/// Rank over F_q of a list of elements of F_{q^n}.
pub fn fq_rank(field: &GaloisField, elems: &[Fe]) -> usize {
    if elems.is_empty() {
        return 0;
    }
    let m = Matrix::from_rows(elems.iter().map(|&e| field.digits(e)).collect());
    linalg::rank(&PrimeField::new(field.characteristic()).unwrap(), &m)
}

/// Moore matrix with one row (x_j, x_j^q, …, x_j^{q^{cols−1}}) per element.
pub fn moore_matrix(field: &GaloisField, elems: &[Fe], cols: usize) -> Matrix<Fe> {
    Matrix::from_rows(
        elems
            .iter()
            .map(|&x| (0..cols).map(|i| field.frobenius(x, i)).collect())
            .collect(),
    )
}

/// Determinant of the `size × size` Moore matrix of `elems`; nonzero iff the
/// elements are F_q-linearly independent.
pub fn moore_determinant(field: &GaloisField, elems: &[Fe], size: usize) -> Result<Fe> {
    if elems.len() != size {
        return Err(Error::Shape {
            expected: size,
            got: elems.len(),
        });
    }
    if size == 0 {
        return Ok(field.one());
    }
    Ok(linalg::determinant(field, &moore_matrix(field, elems, size)))
}

/// The subspace polynomial of span(basis) in determinant form, scaled so
/// the top coefficient is the Moore determinant:
///
/// ```text
///                 | x    x^q    …  x^{q^k}   |
/// h(x) = (−1)^k · | x_0  x_0^q  …  x_0^{q^k} |
///                 | …                        |
/// ```
///
/// Its q-degree is k = basis.len(), its root space is exactly the span, its
/// top coefficient is Δ and its bottom coefficient is (−1)^k · Δ^q, where Δ
/// is the k × k Moore determinant of the basis.
pub fn annihilator(field: &GaloisField, basis: &[Fe]) -> Result<LinPoly> {
    let k = basis.len();
    if k > field.degree() || fq_rank(field, basis) != k {
        return Err(Error::Dependent);
    }
    let rows = moore_matrix(field, basis, k + 1);
    let coeffs = (0..=k)
        .map(|i| {
            // cofactor of (0, i): delete column i
            let minor = Matrix::from_rows(
                (0..k)
                    .map(|r| {
                        rows.row(r)
                            .iter()
                            .enumerate()
                            .filter(|&(c, _)| c != i)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect(),
            );
            let det = if k == 0 {
                field.one()
            } else {
                linalg::determinant(field, &minor)
            };
            if (i + k) % 2 == 1 {
                field.neg(det)
            } else {
                det
            }
        })
        .collect();
    Ok(LinPoly::from_coeffs(coeffs))
}

/// Monic subspace polynomial built by iterated composition
/// h ← (x^q − h(v)^{q−1} x) ∘ h. Proportional to [`annihilator`].
pub fn monic_annihilator(field: &GaloisField, basis: &[Fe]) -> Result<LinPoly> {
    let q = field.characteristic() as u64;
    let mut h = LinPoly::identity(field);
    for &v in basis {
        let hv = h.eval(field, v);
        if hv.is_zero() {
            return Err(Error::Dependent);
        }
        let step = LinPoly::from_coeffs(vec![field.neg(field.pow(hv, q - 1)), field.one()]);
        h = step.compose(field, &h);
    }
    Ok(h)
}
