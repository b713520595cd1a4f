//! Knot refinement via discrete B-splines (the Oslo recursion).
//!
//! Writing the coarse basis in terms of the fine one is the workhorse behind
//! the orthogonal-basis extension: the coefficients come from the same
//! triangular recursion as B-spline values, evaluated at knots instead of
//! parameters.

use crate::bspline::Spline;
use crate::error::{Result, SplineError};
use crate::knots::KnotVector;
use crate::matrix::Mat;
use crate::real::Real;

/// Matrix R with `N^coarse_j = sum_i R[j][i] N^fine_i`.
///
/// `fine` must contain every interior knot of `coarse` with at least the
/// same multiplicity, and the degrees must agree.
pub fn refinement_matrix<T: Real>(coarse: &KnotVector<T>, fine: &KnotVector<T>) -> Result<Mat<T>> {
    check_refines(coarse, fine)?;
    let n = coarse.degree();
    let tau = coarse.full();
    let t = fine.full();
    let dim_c = coarse.dim();
    let dim_f = fine.dim();

    let mut r = Mat::zeros(dim_c, dim_f);
    for i in 0..dim_f {
        // mu: last coarse interval with tau[mu] <= t[i] < tau[mu + 1].
        let x0 = t[i];
        let mut mu = n;
        while mu + 1 < tau.len() - 1 && tau[mu + 1] <= x0 {
            mu += 1;
        }

        // alpha[s] = discrete B-spline of coarse index mu - level + s.
        let mut alpha = vec![T::one()];
        for level in 1..=n {
            let x = t[i + level];
            let mut next = vec![T::zero(); level + 1];
            for s in 0..=level {
                let j = mu + s - level;
                let mut value = T::zero();
                if s >= 1 {
                    let den = tau[j + level] - tau[j];
                    if den > T::zero() {
                        value += (x - tau[j]) / den * alpha[s - 1];
                    }
                }
                if s < level {
                    let den = tau[j + level + 1] - tau[j + 1];
                    if den > T::zero() {
                        value += (tau[j + level + 1] - x) / den * alpha[s];
                    }
                }
                next[s] = value;
            }
            alpha = next;
        }
        for (s, &a) in alpha.iter().enumerate() {
            r[(mu - n + s, i)] = a;
        }
    }
    Ok(r)
}

/// Re-expresses a spline over a refined knot vector; pointwise identical.
pub fn knot_refine<T: Real>(s: &Spline<T>, target: &KnotVector<T>) -> Result<Spline<T>> {
    let r = refinement_matrix(s.kv(), target)?;
    let mut coeffs = vec![T::zero(); target.dim()];
    for (j, &c) in s.coeffs().iter().enumerate() {
        if c != T::zero() {
            for (i, out) in coeffs.iter_mut().enumerate() {
                *out += c * r[(j, i)];
            }
        }
    }
    Spline::new(target.clone(), coeffs)
}

fn check_refines<T: Real>(coarse: &KnotVector<T>, fine: &KnotVector<T>) -> Result<()> {
    if coarse.degree() != fine.degree() {
        return Err(SplineError::DegreeMismatch {
            left: coarse.degree(),
            right: fine.degree(),
        });
    }
    for &(pos, mult) in coarse.interior() {
        let have = fine
            .interior()
            .iter()
            .find(|&&(p, _)| p == pos)
            .map_or(0, |&(_, m)| m);
        if have < mult {
            return Err(SplineError::NotARefinement {
                position: pos.to_f64().unwrap_or(f64::NAN),
                missing: mult - have,
            });
        }
    }
    Ok(())
}
