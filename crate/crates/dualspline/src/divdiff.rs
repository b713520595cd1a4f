//! Divided-difference machinery: the coefficient tables of (n+1)-th
//! derivatives of higher-degree B-splines, and the closed-form discrete
//! B-spline coefficients used to cross-check the Oslo refinement path.

use crate::bspline::Spline;
use crate::error::{Result, SplineError};
use crate::knots::KnotVector;
use crate::ortho::extend_orthogonal;
use crate::polar::monic_from_roots;
use crate::real::{lit, num, Real};

/// Triangular table of repeated difference quotients of B-spline
/// coefficients over a degree 2n+1 clamped knot vector.
///
/// Entry (v, q) refines (v-1, q) and (v-1, q-1) by the quotient rule with
/// out-of-range entries treated as 0; a vanishing denominator makes the
/// quotient 0 rather than infinite, which is what keeps tables over repeated
/// interior knots finite.
pub fn lambda_table<T: Real>(j: usize, kv_ext: &KnotVector<T>) -> Result<Vec<Vec<T>>> {
    let deg = kv_ext.degree();
    assert!(
        deg % 2 == 1,
        "extended knot vector must have odd degree 2n+1"
    );
    let n = (deg - 1) / 2;
    let k = kv_ext.interior_count();
    if j >= k {
        return Err(SplineError::IndexOutOfRange { index: j, dim: k });
    }
    let full = kv_ext.full();
    // signed index q in [-n, n+k+1], centered so q = 0 is the last zero knot
    let knot = |q: isize| -> T { full[(q + deg as isize) as usize] };

    let mut table: Vec<Vec<T>> = Vec::with_capacity(n + 2);
    table.push(vec![T::one()]);
    for v in 1..=(n + 1) {
        let mut row = vec![T::zero(); v + 1];
        for (q, entry) in row.iter_mut().enumerate() {
            let upper = table[v - 1].get(q).copied().unwrap_or(T::zero());
            let lower = if q == 0 {
                T::zero()
            } else {
                table[v - 1][q - 1]
            };
            let hi = knot((n + j + q + 2) as isize - v as isize);
            let lo = knot(q as isize + j as isize - n as isize);
            let den = hi - lo;
            *entry = if den == T::zero() {
                T::zero()
            } else {
                (upper - lower) / den
            };
        }
        table.push(row);
    }
    Ok(table)
}

/// Degree-n spline equal to the (n+1)-th derivative of the j-th zero-boundary
/// B-spline of degree 2n+1 over the same interior knots.
///
/// The coefficients are (2n+1)!/n! times the last row of the difference
/// table, placed at offset j.
pub fn deriv_np1_bspline<T: Real>(j: usize, kv_k: &KnotVector<T>) -> Result<Spline<T>> {
    let n = kv_k.degree();
    let k = kv_k.interior_count();
    if j >= k {
        return Err(SplineError::IndexOutOfRange { index: j, dim: k });
    }
    let kv_ext = kv_k.with_degree(2 * n + 1)?;
    let table = lambda_table(j, &kv_ext)?;

    let mut factor = T::one();
    for r in (n + 1)..=(2 * n + 1) {
        factor *= num::<T>(r);
    }

    let mut coeffs = vec![T::zero(); kv_k.dim()];
    for (h, &lam) in table[n + 1].iter().enumerate() {
        coeffs[j + h] = factor * lam;
    }
    Spline::new(kv_k.clone(), coeffs)
}

/// Coefficient i over kv_m of the k-th orthogonal extension function, by the
/// closed-form discrete B-spline formula instead of the Oslo recursion.
///
/// `s_i` may be any point of basis function i's support window that is not a
/// repeated knot of the prefix vector T_k; the result does not depend on the
/// choice. Retained as an independent cross-check of `knot_refine`.
pub fn gamma_cross_check<T: Real>(i: usize, k: usize, kv_m: &KnotVector<T>, s_i: T) -> Result<T> {
    let n = kv_m.degree();
    let m = kv_m.interior_count();
    let dim = kv_m.dim();
    if i >= dim {
        return Err(SplineError::IndexOutOfRange { index: i, dim });
    }
    if k == 0 || k > m {
        return Err(SplineError::IndexOutOfRange { index: k, dim: m });
    }

    let full_m = kv_m.full();
    let (lo, hi) = (full_m[i], full_m[i + n + 1]);
    if !(s_i >= lo && s_i < hi) {
        return Err(SplineError::InadmissiblePoint {
            point: s_i.to_f64().unwrap_or(f64::NAN),
            detail: format!(
                "must lie in the support window [{}, {})",
                lo.to_f64().unwrap_or(f64::NAN),
                hi.to_f64().unwrap_or(f64::NAN)
            ),
        });
    }

    let kv_k = kv_m.prefix(k);
    let full_k = kv_k.full();
    let copies = full_k.iter().filter(|&&x| x == s_i).count();
    if copies >= 2 {
        return Err(SplineError::InadmissiblePoint {
            point: s_i.to_f64().unwrap_or(f64::NAN),
            detail: "coincides with a repeated knot of the prefix vector".into(),
        });
    }

    // Coefficients of the extension function over T_k.
    let ob_k = extend_orthogonal(&kv_k)?;
    let beta = ob_k.row(n + k);

    // g(y) = (y - s_i)^0_+ * prod over the window knots of basis i.
    let mut poly = monic_from_roots(&full_m[i + 1..i + 1 + n]);
    poly.push(T::one());

    let mut gamma = T::zero();
    for (h, &b) in beta.iter().enumerate() {
        if b == T::zero() {
            continue;
        }
        let window = &full_k[h..h + n + 2];
        let weight = full_k[h + n + 1] - full_k[h];
        if weight == T::zero() {
            continue;
        }
        gamma += b * weight * divided_difference_step(window, &poly, s_i);
    }
    Ok(gamma)
}

/// Default admissible point for [`gamma_cross_check`]: the midpoint of the
/// support window, nudged upward by 1e-6 of the window if it lands on a
/// repeated knot.
pub fn admissible_point<T: Real>(kv_m: &KnotVector<T>, i: usize) -> T {
    let n = kv_m.degree();
    let full = kv_m.full();
    let (lo, hi) = (full[i], full[i + n + 1]);
    let mut s = (lo + hi) * lit::<T>(0.5);
    let collides = |x: T| kv_m.interior().iter().any(|&(p, mult)| mult >= 2 && p == x);
    if collides(s) {
        s += (hi - lo) * lit::<T>(1e-6);
    }
    s
}

/// Confluent divided difference over nondecreasing nodes of the one-sided
/// function (y - step)^0_+ * p(y), with p given by monomial coefficients.
///
/// Repeated nodes use derivatives; those exist because a node equal to the
/// step location is only permitted when simple, where just the value (zero)
/// is needed.
fn divided_difference_step<T: Real>(nodes: &[T], poly: &[T], step: T) -> T {
    let len = nodes.len();
    let eval = |x: T, order: usize| -> T {
        if x > step {
            poly_derivative_eval(poly, order, x)
        } else {
            T::zero()
        }
    };

    // c[i][j] = divided difference over nodes i..=j
    let mut table = vec![vec![T::zero(); len]; len];
    for i in 0..len {
        table[i][i] = eval(nodes[i], 0);
    }
    for width in 1..len {
        for i in 0..len - width {
            let j = i + width;
            table[i][j] = if nodes[j] == nodes[i] {
                let mut fact = T::one();
                for r in 1..=width {
                    fact *= num::<T>(r);
                }
                eval(nodes[i], width) / fact
            } else {
                (table[i + 1][j] - table[i][j - 1]) / (nodes[j] - nodes[i])
            };
        }
    }
    table[0][len - 1]
}

/// Evaluates the `order`-th derivative of a polynomial given by coefficients
/// low-to-high.
fn poly_derivative_eval<T: Real>(coeffs: &[T], order: usize, x: T) -> T {
    if order >= coeffs.len() {
        return T::zero();
    }
    let mut work = coeffs.to_vec();
    for _ in 0..order {
        for i in 1..work.len() {
            work[i - 1] = work[i] * num::<T>(i);
        }
        work.pop();
    }
    work.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}
