//! Dense row-major matrices, just large enough for this crate.
//!
//! Spline spaces here have dimension n + m + 1, which stays in the tens, so a
//! plain `Vec`-backed matrix beats pulling in a linear-algebra stack. The one
//! nontrivial routine is [`null_vector`], a Householder factorization used to
//! extract the one-dimensional orthogonal complement in the basis extension.

use std::ops::{Index, IndexMut};

use crate::error::{Result, SplineError};
use crate::real::Real;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
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

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_row(&mut self, i: usize, row: &[T]) {
        assert_eq!(row.len(), self.cols);
        self.row_mut(i).copy_from_slice(row);
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn matmul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// `vᵀ * self * w` quadratic form.
    pub fn quad_form(&self, v: &[T], w: &[T]) -> T {
        let mv = self.matvec(w);
        v.iter()
            .zip(&mv)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()))
    }

    /// Largest absolute deviation from another matrix of the same shape.
    pub fn max_abs_diff(&self, other: &Mat<T>) -> T {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Unit vector spanning the null space of a matrix with one more column than
/// its rank.
///
/// `c` must be r x (r+1) with full row rank; the result `x` satisfies
/// `c * x = 0`. Internally this is a Householder factorization of `cᵀ`: the
/// last column of the orthogonal factor is orthogonal to every row of `c`.
/// A collapse of the triangular factor's diagonal signals that the null space
/// is not one-dimensional.
pub fn null_vector<T: Real>(c: &Mat<T>) -> Result<Vec<T>> {
    let r = c.rows();
    let n = c.cols();
    assert_eq!(n, r + 1, "null_vector expects one more column than rows");
    if r == 0 {
        return Ok(vec![T::one()]);
    }

    // Work on m = cᵀ (n x r), reducing column by column.
    let mut m = c.transpose();
    let mut reflectors: Vec<Vec<T>> = Vec::with_capacity(r);
    let mut diag: Vec<T> = Vec::with_capacity(r);

    for j in 0..r {
        // Householder vector for column j, rows j..n.
        let norm_x = {
            let mut s = T::zero();
            for i in j..n {
                s += m[(i, j)] * m[(i, j)];
            }
            s.sqrt()
        };
        let mut v = vec![T::zero(); n];
        if norm_x == T::zero() {
            diag.push(T::zero());
            reflectors.push(v);
            continue;
        }
        let alpha = if m[(j, j)] >= T::zero() {
            -norm_x
        } else {
            norm_x
        };
        for i in j..n {
            v[i] = m[(i, j)];
        }
        v[j] -= alpha;
        let vtv = v[j..].iter().fold(T::zero(), |acc, &x| acc + x * x);
        if vtv > T::zero() {
            // Apply H = I - 2 v vᵀ / (vᵀ v) to the remaining columns.
            for col in j..r {
                let dot = (j..n).fold(T::zero(), |acc, i| acc + v[i] * m[(i, col)]);
                let scale = (T::one() + T::one()) * dot / vtv;
                for i in j..n {
                    m[(i, col)] -= scale * v[i];
                }
            }
        }
        diag.push(alpha);
        reflectors.push(v);
    }

    let largest = diag.iter().fold(T::zero(), |acc, &d| acc.max(d.abs()));
    let guard = largest * T::epsilon() * crate::real::lit(1e4);
    if largest == T::zero() || diag.iter().any(|d| d.abs() <= guard) {
        return Err(SplineError::RankDeficient);
    }

    // q = H_0 H_1 ... H_{r-1} e_{n-1}; apply the reflectors in reverse.
    let mut q = vec![T::zero(); n];
    q[n - 1] = T::one();
    for v in reflectors.iter().rev() {
        let vtv = v.iter().fold(T::zero(), |acc, &x| acc + x * x);
        if vtv > T::zero() {
            let dot = v
                .iter()
                .zip(&q)
                .fold(T::zero(), |acc, (&a, &b)| acc + a * b);
            let scale = (T::one() + T::one()) * dot / vtv;
            for i in 0..n {
                q[i] -= scale * v[i];
            }
        }
    }
    Ok(q)
}
