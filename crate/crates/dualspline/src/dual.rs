//! Dual basis for the B-spline basis under the L2 inner product.
//!
//! With the orthogonal basis in hand the dual functions are immediate: dual
//! function j is the combination of orthogonal functions weighted by their
//! own coordinates over basis function j, divided by the squared norms.
//! In matrix terms Dmat = Aᵀ diag(h)⁻¹ A, which also equals the inverse of
//! the Gram matrix — the property the oracle tests pin down.

use crate::bspline::{basis_eval_all, Spline};
use crate::error::{Result, SplineError};
use crate::gram::GramMatrix;
use crate::knots::KnotVector;
use crate::legendre::LegendreCombination;
use crate::matrix::Mat;
use crate::ortho::{extend_orthogonal, OrthoSplineBasis};
use crate::real::{lit, Real};

/// Dual basis in both representations: `rho` holds the coordinates over the
/// orthogonal basis, `dmat` the B-spline coefficients (row j = dual
/// function j). `dmat` is symmetric since it inverts the Gram matrix.
#[derive(Debug, Clone)]
pub struct DualBasisMatrix<T> {
    kv: KnotVector<T>,
    rho: Mat<T>,
    dmat: Mat<T>,
}

impl<T: Real> DualBasisMatrix<T> {
    pub fn kv(&self) -> &KnotVector<T> {
        &self.kv
    }

    /// Coordinates of the dual functions over the orthogonal basis.
    pub fn rho(&self) -> &Mat<T> {
        &self.rho
    }

    /// B-spline coefficients of the dual functions, one per row.
    pub fn dmat(&self) -> &Mat<T> {
        &self.dmat
    }

    pub fn dim(&self) -> usize {
        self.dmat.rows()
    }

    /// Dual function j as a spline.
    pub fn dual_spline(&self, j: usize) -> Result<Spline<T>> {
        if j >= self.dim() {
            return Err(SplineError::IndexOutOfRange {
                index: j,
                dim: self.dim(),
            });
        }
        Spline::new(self.kv.clone(), self.dmat.row(j).to_vec())
    }
}

/// Relative gap below which the norms are considered degenerate; nearly
/// coalescing knots drive the smallest norm towards zero and would otherwise
/// pollute the dual basis silently.
const NORM_GUARD: f64 = 1e-13;

/// Builds the dual basis for the B-spline basis over `kv`.
pub fn build_dual<T: Real>(kv: &KnotVector<T>) -> Result<DualBasisMatrix<T>> {
    let ob = extend_orthogonal(kv)?;
    build_dual_from(&ob)
}

/// Dual basis from an already-built orthogonal basis.
pub fn build_dual_from<T: Real>(ob: &OrthoSplineBasis<T>) -> Result<DualBasisMatrix<T>> {
    let dim = ob.dim();
    let h = ob.norms();
    let largest = h.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()));
    let smallest = h.iter().fold(T::infinity(), |acc, &x| acc.min(x.abs()));
    if smallest < lit::<T>(NORM_GUARD) * largest {
        return Err(SplineError::IllConditioned {
            smallest: smallest.to_f64().unwrap_or(f64::NAN),
            largest: largest.to_f64().unwrap_or(f64::NAN),
            guard: NORM_GUARD,
        });
    }

    let a = ob.a();
    let mut rho = Mat::zeros(dim, dim);
    for j in 0..dim {
        for i in 0..dim {
            rho[(j, i)] = a[(i, j)] / h[i];
        }
    }
    let dmat = rho.matmul(a);
    Ok(DualBasisMatrix {
        kv: ob.kv().clone(),
        rho,
        dmat,
    })
}

/// Value of dual function j at t, from its B-spline coordinates.
pub fn dual_eval<T: Real>(d: &DualBasisMatrix<T>, j: usize, t: T) -> Result<T> {
    if j >= d.dim() {
        return Err(SplineError::IndexOutOfRange {
            index: j,
            dim: d.dim(),
        });
    }
    let basis = basis_eval_all(&d.kv, t)?;
    Ok(d.dmat
        .row(j)
        .iter()
        .zip(&basis)
        .fold(T::zero(), |acc, (&c, &b)| acc + c * b))
}

/// Coordinates of a spline over the orthogonal basis: sigma_i = <s, L_i>/h_i,
/// computed through the Gram matrix.
pub fn bspline_to_orthogonal<T: Real>(
    s: &Spline<T>,
    ob: &OrthoSplineBasis<T>,
    g: &GramMatrix<T>,
) -> Result<LegendreCombination<T>> {
    if s.kv() != ob.kv() || g.kv() != ob.kv() {
        return Err(SplineError::KnotVectorMismatch {
            detail: "spline, basis, and Gram matrix must agree".into(),
        });
    }
    let coeffs = (0..ob.dim())
        .map(|i| g.entries().quad_form(s.coeffs(), ob.row(i)) / ob.norms()[i])
        .collect();
    Ok(LegendreCombination::new(ob.kv().degree(), coeffs))
}
