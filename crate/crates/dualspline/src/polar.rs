//! Symmetric functions of knots: monic coefficients and the polar-form sums
//! that convert monomials into B-spline coordinates.

use crate::error::{Result, SplineError};
use crate::knots::KnotVector;
use crate::real::Real;

/// Coefficients w of t^0..t^{n-1} with t^n + sum w_i t^i = prod (t - root_i),
/// by incremental multiplication in O(n^2).
pub fn monic_from_roots<T: Real>(roots: &[T]) -> Vec<T> {
    // coeffs of the running monic product, low to high, leading 1 included
    let mut c = vec![T::one()];
    for &r in roots {
        let mut next = vec![T::zero(); c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= r * ci;
        }
        c = next;
    }
    c.truncate(roots.len());
    c
}

/// Sums of h-fold products of the n knots strictly between the endpoints of
/// basis function j's support window: `r[0] = 1` and `r[h] = (-1)^h w_{n-h}`.
pub fn elementary_symmetric<T: Real>(kv: &KnotVector<T>, j: usize) -> Result<Vec<T>> {
    let n = kv.degree();
    let dim = kv.dim();
    if j >= dim {
        return Err(SplineError::IndexOutOfRange { index: j, dim });
    }
    let window = &kv.full()[j + 1..j + 1 + n];
    let w = monic_from_roots(window);
    let mut r = vec![T::one(); n + 1];
    let mut sign = T::one();
    for h in 1..=n {
        sign = -sign;
        r[h] = sign * w[n - h];
    }
    Ok(r)
}
