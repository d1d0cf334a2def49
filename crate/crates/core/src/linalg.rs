//! Dense Gaussian elimination over an arbitrary field.
//!
//! Used twice with different scalars: over the prime field F_q for rank
//! norms and kernels, and over F_{q^n} for interpolation systems and Moore
//! determinants. Pivoting always takes the first nonzero entry, so results
//! are deterministic.

use std::fmt::Debug;
use std::ops::{Index, IndexMut};

/// Minimal field interface needed by the elimination routines.
pub trait Field {
    type Elem: Copy + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn try_inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }
}

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n_rows = rows.len();
        Self {
            rows: n_rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// columns in increasing order.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !field.is_zero(m[(i, col)])) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = field.try_inv(m[(row, col)]).expect("pivot is nonzero");
        for j in col..m.cols {
            m[(row, j)] = field.mul(m[(row, j)], inv);
        }
        for i in 0..m.rows {
            if i == row {
                continue;
            }
            let factor = m[(i, col)];
            if field.is_zero(factor) {
                continue;
            }
            for j in col..m.cols {
                let v = field.mul(factor, m[(row, j)]);
                m[(i, j)] = field.sub(m[(i, j)], v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column of the reduced
/// echelon form, with a 1 in that free column.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(field, &mut work);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(work[(r, free)]);
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix by elimination.
pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut work = m.clone();
    let mut det = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !field.is_zero(work[(i, col)])) else {
            return field.zero();
        };
        if p != col {
            work.swap_rows(col, p);
            det = field.neg(det);
        }
        let pivot = work[(col, col)];
        det = field.mul(det, pivot);
        let inv = field.try_inv(pivot).expect("pivot is nonzero");
        for i in col + 1..n {
            let factor = field.mul(work[(i, col)], inv);
            if field.is_zero(factor) {
                continue;
            }
            for j in col..n {
                let v = field.mul(factor, work[(col, j)]);
                work[(i, j)] = field.sub(work[(i, j)], v);
            }
        }
    }
    det
}

/// Matrix-vector product, used by tests and by solution checks.
pub fn apply<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(v.len(), m.cols);
    (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(field.zero(), |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}
