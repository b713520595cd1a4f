//! Gram matrix of the B-spline basis under the L2 inner product on [0, 1].

use crate::bspline::basis_eval_all;
use crate::knots::KnotVector;
use crate::matrix::Mat;
use crate::quadrature::GaussLegendre;
use crate::real::Real;

/// Symmetric positive-definite matrix of pairwise basis inner products,
/// banded with bandwidth equal to the degree.
#[derive(Debug, Clone)]
pub struct GramMatrix<T> {
    kv: KnotVector<T>,
    entries: Mat<T>,
}

impl<T: Real> GramMatrix<T> {
    pub fn kv(&self) -> &KnotVector<T> {
        &self.kv
    }

    pub fn entries(&self) -> &Mat<T> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        self.entries[(i, j)]
    }

    #[cfg(test)]
    pub(crate) fn test_with_entries(kv: KnotVector<T>, entries: Mat<T>) -> Self {
        GramMatrix { kv, entries }
    }
}

/// Assembles the Gram matrix by Gauss–Legendre quadrature with degree + 1
/// nodes on every nonempty knot interval; the integrand is a polynomial of
/// degree 2n there, so each entry is exact up to rounding. Only entries with
/// overlapping supports are ever touched.
pub fn gram_bsplines<T: Real>(kv: &KnotVector<T>) -> GramMatrix<T> {
    let n = kv.degree();
    let dim = kv.dim();
    let rule = GaussLegendre::new(n + 1);
    let mut entries = Mat::zeros(dim, dim);
    for (a, b) in kv.spans() {
        for (t, w) in rule.mapped(a, b) {
            let vals = basis_eval_all(kv, t).expect("quadrature node inside [0, 1]");
            let active: Vec<usize> = (0..dim).filter(|&i| vals[i] != T::zero()).collect();
            for &i in &active {
                for &j in &active {
                    entries[(i, j)] += w * vals[i] * vals[j];
                }
            }
        }
    }
    GramMatrix {
        kv: kv.clone(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_single_interval() {
        let kv = KnotVector::<f64>::bezier(0);
        let g = gram_bsplines(&kv);
        assert_eq!(g.dim(), 1);
        assert!((g.entry(0, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn linear_hat_space() {
        // degree 1 over {1/2}: G00 = int_0^{1/2} (1 - 2t)^2 dt = 1/6.
        let kv = KnotVector::new(1, &[(0.5f64, 1)]).unwrap();
        let g = gram_bsplines(&kv);
        assert_eq!(g.dim(), 3);
        assert!((g.entry(0, 0) - 1.0 / 6.0).abs() < 1e-15);
        // hat with support (0, 1): int = 2 * int_0^{1/2} (2t)^2 dt = 1/3
        assert!((g.entry(1, 1) - 1.0 / 3.0).abs() < 1e-15);
        assert!((g.entry(0, 2)).abs() < 1e-16, "disjoint supports");
    }

    #[test]
    fn row_sums_are_basis_integrals() {
        let kv = KnotVector::new(3, &[(0.2f64, 1), (0.5, 2), (0.8, 1)]).unwrap();
        let g = gram_bsplines(&kv);
        for i in 0..g.dim() {
            let row_sum: f64 = (0..g.dim()).map(|j| g.entry(i, j)).sum();
            let (a, b) = kv.support(i);
            let want = (b - a) / 4.0;
            assert!((row_sum - want).abs() < 1e-14, "row {i}");
        }
    }

    #[test]
    fn symmetric_and_banded() {
        let kv = KnotVector::new(2, &[(0.3f64, 1), (0.6, 2)]).unwrap();
        let g = gram_bsplines(&kv);
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                assert!((g.entry(i, j) - g.entry(j, i)).abs() < 1e-16);
                if i.abs_diff(j) > 2 {
                    assert_eq!(g.entry(i, j), 0.0, "band violation at ({i}, {j})");
                }
            }
        }
    }
}
