//! Legendre-like orthogonal basis of a spline space in B-spline coordinates.
//!
//! The first n + 1 members are the shifted Legendre polynomials, written in
//! B-spline form through symmetric functions of the knots. Each later member
//! spans the one-dimensional orthogonal complement that opens up when one
//! more interior knot is added, and is found as the null vector of the
//! inner-product constraints against the previous space.

use crate::bspline::Spline;
use crate::error::{Result, SplineError};
use crate::gram::{gram_bsplines, GramMatrix};
use crate::knots::KnotVector;
use crate::matrix::{null_vector, Mat};
use crate::polar::elementary_symmetric;
use crate::real::{num, Real};
use crate::refine::{knot_refine, refinement_matrix};

/// Orthogonal basis: row i of `a` holds the B-spline coefficients of the
/// i-th orthogonal function, `h[i]` its squared L2 norm.
#[derive(Debug, Clone)]
pub struct OrthoSplineBasis<T> {
    kv: KnotVector<T>,
    a: Mat<T>,
    h: Vec<T>,
}

impl<T: Real> OrthoSplineBasis<T> {
    /// Wraps an explicit coefficient matrix, recomputing the norms from the
    /// Gram matrix. The rows are taken as given and are not re-orthogonalized.
    pub fn from_rows(kv: KnotVector<T>, a: Mat<T>, g: &GramMatrix<T>) -> Result<Self> {
        if g.kv() != &kv || a.rows() != kv.dim() || a.cols() != kv.dim() {
            return Err(SplineError::KnotVectorMismatch {
                detail: "basis matrix and Gram matrix must share one knot vector".into(),
            });
        }
        let h = (0..a.rows())
            .map(|i| g.entries().quad_form(a.row(i), a.row(i)))
            .collect();
        Ok(OrthoSplineBasis { kv, a, h })
    }

    pub fn kv(&self) -> &KnotVector<T> {
        &self.kv
    }

    /// Coefficient matrix, one orthogonal function per row.
    pub fn a(&self) -> &Mat<T> {
        &self.a
    }

    /// Squared L2 norms of the rows.
    pub fn norms(&self) -> &[T] {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn row(&self, i: usize) -> &[T] {
        self.a.row(i)
    }
}

/// First n + 1 rows of the orthogonal basis: the shifted Legendre
/// polynomials in B-spline coordinates.
///
/// Row 0 is all ones; row i combines the h-fold symmetric knot sums with the
/// Legendre monomial coefficients divided by binomial(n, h).
pub fn legendre_rows<T: Real>(kv: &KnotVector<T>) -> Mat<T> {
    let n = kv.degree();
    let dim = kv.dim();
    let mut rows = Mat::zeros(n + 1, dim);

    // coef[i][h] = (-i)_h (i+1)_h / (binom(n, h) (h!)^2), by ratio updates.
    let mut coef = vec![vec![T::zero(); n + 1]; n + 1];
    for (i, row) in coef.iter_mut().enumerate() {
        let mut c = T::one();
        row[0] = c;
        for h in 0..i {
            let hf = num::<T>(h);
            let ratio = (hf - num::<T>(i)) * (num::<T>(i) + T::one() + hf)
                / ((hf + T::one()) * (num::<T>(n) - hf));
            c *= ratio;
            row[h + 1] = c;
        }
    }

    for j in 0..dim {
        let r = elementary_symmetric(kv, j).expect("j ranges over the basis");
        rows[(0, j)] = T::one();
        for i in 1..=n {
            let mut phi = T::zero();
            for h in 0..=i {
                phi += coef[i][h] * r[h];
            }
            rows[(i, j)] = phi;
        }
    }
    rows
}

/// Builds the full orthogonal basis of the space over `kv`.
///
/// For each k the new orthogonal function is computed over the prefix knot
/// vector T_k as the null vector of C x = 0, where the rows of C are the
/// inner products of the refined T_{k-1} basis against the T_k basis; the
/// result is refined onto the full knot vector, scaled to unit Euclidean
/// coefficient norm, and signed so its largest-magnitude entry is positive.
pub fn extend_orthogonal<T: Real>(kv: &KnotVector<T>) -> Result<OrthoSplineBasis<T>> {
    let n = kv.degree();
    let m = kv.interior_count();
    let dim = kv.dim();

    let mut a = Mat::zeros(dim, dim);
    let polys = legendre_rows(kv);
    for i in 0..=n {
        a.set_row(i, polys.row(i));
    }

    let mut prev = kv.prefix(0);
    for k in 1..=m {
        let kv_k = kv.prefix(k);
        let g_k = gram_bsplines(&kv_k);
        let r = refinement_matrix(&prev, &kv_k)?;
        let c = r.matmul(g_k.entries());
        let x = null_vector(&c)?;

        let over_k = Spline::new(kv_k.clone(), x)?;
        let refined = knot_refine(&over_k, kv)?;
        let mut row = refined.coeffs().to_vec();
        normalize_row(&mut row);
        a.set_row(n + k, &row);

        prev = kv_k;
    }

    let g = gram_bsplines(kv);
    OrthoSplineBasis::from_rows(kv.clone(), a, &g)
}

/// Largest off-diagonal entry of A G Aᵀ relative to the largest norm.
pub fn orthogonality_residual<T: Real>(ob: &OrthoSplineBasis<T>, g: &GramMatrix<T>) -> T {
    let gram_of_rows = ob.a().matmul(g.entries()).matmul(&ob.a().transpose());
    let dim = gram_of_rows.rows();
    let mut max_off = T::zero();
    let mut max_h = T::zero();
    for i in 0..dim {
        max_h = max_h.max(gram_of_rows[(i, i)].abs());
        for j in 0..dim {
            if i != j {
                max_off = max_off.max(gram_of_rows[(i, j)].abs());
            }
        }
    }
    if max_h == T::zero() {
        max_off
    } else {
        max_off / max_h
    }
}

fn normalize_row<T: Real>(row: &mut [T]) {
    let norm = row.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let mut lead = T::zero();
    for &x in row.iter() {
        if x.abs() > lead.abs() {
            lead = x;
        }
    }
    let scale = if lead < T::zero() { -norm } else { norm };
    for x in row.iter_mut() {
        *x /= scale;
    }
}
