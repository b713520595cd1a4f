//! Dual bases for the power and truncated power bases.
//!
//! The polynomial seed is explicit: dual power function j is a Legendre
//! combination with coefficients (2i+1)(-i)_j(i+1)_j/(j!)^2. Adding a simple
//! interior knot appends the truncated power (t - t_i)^n_+ to the basis, and
//! the dual set is extended iteratively: the new dual function is a
//! combination of the old ones plus the new basis function, fixed by the
//! duality conditions, and the old dual functions pick up a correction
//! proportional to their inner product with the new basis function.

use crate::bspline::truncated_power_eval;
use crate::error::{Result, SplineError};
use crate::legendre::{clenshaw, legendre_monomial_coeffs, pochhammer};
use crate::matrix::Mat;
use crate::real::{lit, num, Real};

/// Matrix of the dual power basis: column j holds the Legendre coefficients
/// of the dual of t^j, entry (i, j) = (2i+1)(-i)_j(i+1)_j/(j!)^2.
///
/// Upper-triangular in exact arithmetic (zero for i < j) but stored dense.
pub fn dual_power_basis<T: Real>(n: usize) -> Mat<T> {
    let mut phi = Mat::zeros(n + 1, n + 1);
    for i in 0..=n {
        let two_i1 = num::<T>(2 * i + 1);
        for j in 0..=n {
            let mut fact = T::one();
            for r in 1..=j {
                fact *= num::<T>(r);
            }
            phi[(i, j)] = two_i1 * pochhammer(-num::<T>(i), j) * pochhammer(num::<T>(i + 1), j)
                / (fact * fact);
        }
    }
    phi
}

/// Moments v_j = <t^j, (t - t_i)^n_+> for j = 0..n by the three-term
/// recurrence, O(n) work.
pub fn v_moment_vector<T: Real>(n: usize, t_i: T) -> Result<Vec<T>> {
    if !(t_i > T::zero() && t_i < T::one()) {
        return Err(SplineError::KnotOutOfRange {
            position: t_i.to_f64().unwrap_or(f64::NAN),
        });
    }
    let one = T::one();
    let mut v = Vec::with_capacity(n + 1);
    let v0 = (one - t_i).powi(n as i32 + 1) / num::<T>(n + 1);
    v.push(v0);
    if n >= 1 {
        let v1 = t_i * v0 + (one - t_i).powi(n as i32 + 2) / num::<T>(n + 2);
        v.push(v1);
    }
    let a = (one - t_i) / t_i;
    for j in 2..=n {
        let jf = num::<T>(j);
        let nf = num::<T>(n);
        let den = nf + jf + one;
        let lead = ((a + lit::<T>(2.0)) * jf + nf * (a + one)) * t_i / den;
        let trail = (a + one) * (jf - one) * t_i * t_i / den;
        let vj = lead * v[j - 1] - trail * v[j - 2];
        v.push(vj);
    }
    Ok(v)
}

/// <(t - t_j)^n_+, (t - t_i)^n_+> for 0 < t_j < t_i < 1, via the terminating
/// hypergeometric form.
pub fn v_truncated_pair<T: Real>(n: usize, t_j: T, t_i: T) -> Result<T> {
    if !(t_j > T::zero() && t_j < t_i && t_i < T::one()) {
        return Err(SplineError::InadmissiblePoint {
            point: t_j.to_f64().unwrap_or(f64::NAN),
            detail: "pair inner product requires 0 < t_j < t_i < 1".into(),
        });
    }
    let v_self = truncated_self_product(n, t_i);
    let z = (t_i - t_j) / (t_i - T::one());
    let two_n = num::<T>(2 * n);
    let f = crate::legendre::hyp2f1_terminating(n, -two_n - T::one(), -two_n, z)?;
    Ok(v_self * f)
}

/// <(t - t_i)^n_+, (t - t_i)^n_+> = (1 - t_i)^{2n+1} / (2n + 1).
pub fn truncated_self_product<T: Real>(n: usize, t_i: T) -> T {
    (T::one() - t_i).powi(2 * n as i32 + 1) / num::<T>(2 * n + 1)
}

/// Dual basis of {1, t, ..., t^n, (t - t_1)^n_+, ..., (t - t_i)^n_+} after i
/// extension steps.
///
/// Column j of `psi` (and of `lambda`) holds dual function j:
/// `d_j = sum_k psi[k][j] L_k + sum_h lambda[h][j] (t - knots[h])^n_+`.
/// Rows of `lambda` pair with `knots` in insertion order.
#[derive(Debug, Clone)]
pub struct TruncatedDualState<T> {
    n: usize,
    knots: Vec<T>,
    psi: Mat<T>,
    lambda: Mat<T>,
}

impl<T: Real> TruncatedDualState<T> {
    /// Seed state: the dual power basis, no interior knots.
    pub fn seed(n: usize) -> Self {
        TruncatedDualState {
            n,
            knots: Vec::new(),
            psi: dual_power_basis(n),
            lambda: Mat::zeros(0, n + 1),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn knots(&self) -> &[T] {
        &self.knots
    }

    pub fn psi(&self) -> &Mat<T> {
        &self.psi
    }

    pub fn lambda(&self) -> &Mat<T> {
        &self.lambda
    }

    /// Number of dual functions, n + 1 + number of knots.
    pub fn dim(&self) -> usize {
        self.n + 1 + self.knots.len()
    }
}

/// Relative magnitude below which the extension denominator counts as
/// degenerate.
const EXTENSION_GUARD: f64 = 1e-13;

/// One extension step: adds the truncated power at `t_new` to the basis and
/// returns the dual set of the enlarged space.
///
/// `t_new` may fall anywhere strictly between existing knots; the pair inner
/// products order their arguments internally.
pub fn extend_dual_truncated<T: Real>(
    state: &TruncatedDualState<T>,
    t_new: T,
) -> Result<TruncatedDualState<T>> {
    let n = state.n;
    if !(t_new > T::zero() && t_new < T::one()) {
        return Err(SplineError::KnotOutOfRange {
            position: t_new.to_f64().unwrap_or(f64::NAN),
        });
    }
    if state.knots.contains(&t_new) {
        return Err(SplineError::DuplicateKnot {
            position: t_new.to_f64().unwrap_or(f64::NAN),
        });
    }

    let old_knots = state.knots.len();
    let old_dim = state.dim();

    // Inner products of the new basis function against the old basis.
    let v_poly = v_moment_vector(n, t_new)?;
    let v_self = truncated_self_product(n, t_new);
    let mut v_trunc = Vec::with_capacity(old_knots);
    for &k in &state.knots {
        let v = if k < t_new {
            v_truncated_pair(n, k, t_new)?
        } else {
            v_truncated_pair(n, t_new, k)?
        };
        v_trunc.push(v);
    }

    // <(t - t_new)^n_+, L_k> through the monomial expansion of L_k.
    let lvals: Vec<T> = (0..=n)
        .map(|k| {
            legendre_monomial_coeffs::<T>(k)
                .iter()
                .zip(&v_poly)
                .fold(T::zero(), |acc, (&c, &v)| acc + c * v)
        })
        .collect();

    // u_j = <(t - t_new)^n_+, d_j> for the old dual functions.
    let mut u = vec![T::zero(); old_dim];
    for (j, uj) in u.iter_mut().enumerate() {
        let mut acc = T::zero();
        for (k, &lv) in lvals.iter().enumerate() {
            acc += state.psi[(k, j)] * lv;
        }
        for (h, &vt) in v_trunc.iter().enumerate() {
            acc += state.lambda[(h, j)] * vt;
        }
        *uj = acc;
    }

    let mut v_full = v_poly;
    v_full.extend_from_slice(&v_trunc);

    let den = v_full
        .iter()
        .zip(&u)
        .fold(v_self, |acc, (&v, &uj)| acc - v * uj);
    if den.abs() < lit::<T>(EXTENSION_GUARD) * v_self.abs() {
        return Err(SplineError::DegenerateExtension {
            denominator: den.to_f64().unwrap_or(f64::NAN),
            guard: EXTENSION_GUARD,
        });
    }
    let c_new = den.recip();
    let c: Vec<T> = v_full.iter().map(|&v| -v * c_new).collect();

    // New dual function: combination of the old duals plus the new basis
    // function itself.
    let psi_new: Vec<T> = (0..=n)
        .map(|k| {
            c.iter()
                .enumerate()
                .fold(T::zero(), |acc, (l, &cl)| acc + cl * state.psi[(k, l)])
        })
        .collect();
    let lambda_new: Vec<T> = (0..old_knots)
        .map(|h| {
            c.iter()
                .enumerate()
                .fold(T::zero(), |acc, (l, &cl)| acc + cl * state.lambda[(h, l)])
        })
        .collect();

    let mut psi = Mat::zeros(n + 1, old_dim + 1);
    let mut lambda = Mat::zeros(old_knots + 1, old_dim + 1);
    for j in 0..old_dim {
        for k in 0..=n {
            psi[(k, j)] = state.psi[(k, j)] - u[j] * psi_new[k];
        }
        for h in 0..old_knots {
            lambda[(h, j)] = state.lambda[(h, j)] - u[j] * lambda_new[h];
        }
        lambda[(old_knots, j)] = -u[j] * c_new;
    }
    for k in 0..=n {
        psi[(k, old_dim)] = psi_new[k];
    }
    for h in 0..old_knots {
        lambda[(h, old_dim)] = lambda_new[h];
    }
    lambda[(old_knots, old_dim)] = c_new;

    let mut knots = state.knots.clone();
    knots.push(t_new);
    Ok(TruncatedDualState {
        n,
        knots,
        psi,
        lambda,
    })
}

/// Folds the extension over the knots in ascending order, starting from the
/// dual power basis.
pub fn build_dual_truncated<T: Real>(n: usize, knots: &[T]) -> Result<TruncatedDualState<T>> {
    let mut sorted = knots.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("knots must be comparable"));
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(SplineError::DuplicateKnot {
                position: pair[0].to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let mut state = TruncatedDualState::seed(n);
    for &k in &sorted {
        state = extend_dual_truncated(&state, k)?;
    }
    Ok(state)
}

/// Value of dual function j at t: Clenshaw on the Legendre part plus the
/// truncated power tail.
pub fn dual_truncated_eval<T: Real>(state: &TruncatedDualState<T>, j: usize, t: T) -> Result<T> {
    if j >= state.dim() {
        return Err(SplineError::IndexOutOfRange {
            index: j,
            dim: state.dim(),
        });
    }
    if !(t >= T::zero() && t <= T::one()) {
        return Err(SplineError::ParameterOutOfRange {
            t: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    let poly_coeffs: Vec<T> = (0..=state.n).map(|k| state.psi[(k, j)]).collect();
    let mut value = clenshaw(&poly_coeffs, t);
    for (h, &knot) in state.knots.iter().enumerate() {
        value += state.lambda[(h, j)] * truncated_power_eval(t, knot, state.n);
    }
    Ok(value)
}
