//! Shifted Legendre polynomials on [0, 1], terminating hypergeometric sums,
//! and Clenshaw evaluation of Legendre combinations.
//!
//! The shifted family used throughout is L_i(t) = (-1)^i P_i(2t - 1), which
//! starts L_0 = 1, L_1 = 1 - 2t and is orthogonal on [0, 1] with
//! <L_i, L_i> = 1/(2i + 1).

use crate::error::{Result, SplineError};
use crate::real::{lit, num, Real};

/// Rising factorial (h)_k = h (h+1) ... (h+k-1), with (h)_0 = 1.
pub fn pochhammer<T: Real>(h: T, k: usize) -> T {
    let mut acc = T::one();
    let mut factor = h;
    for _ in 0..k {
        acc *= factor;
        factor += T::one();
    }
    acc
}

/// Terminating Gauss sum sum_{k=0}^{s} (-s)_k (a)_k / ((b)_k k!) t^k.
///
/// Terms are accumulated by their ratio, and the sum stops as soon as a
/// numerator factor vanishes, so a nonpositive-integer `b` is harmless as
/// long as `(b)_k` stays nonzero up to the point of termination. A zero
/// denominator that is not rescued that way is an error.
pub fn hyp2f1_terminating<T: Real>(s: usize, a: T, b: T, t: T) -> Result<T> {
    let mut sum = T::one();
    let mut term = T::one();
    for k in 0..s {
        let kf = num::<T>(k);
        let numerator = (kf - num::<T>(s)) * (a + kf);
        if numerator == T::zero() {
            break;
        }
        let denominator = (b + kf) * (kf + T::one());
        if denominator == T::zero() {
            return Err(SplineError::HypergeometricPole { term: k + 1 });
        }
        term = term * numerator / denominator * t;
        sum += term;
    }
    Ok(sum)
}

/// L_i(t) by the three-term recurrence.
pub fn shifted_legendre_eval<T: Real>(i: usize, t: T) -> T {
    let x = T::one() - lit::<T>(2.0) * t;
    if i == 0 {
        return T::one();
    }
    let mut prev = T::one();
    let mut cur = x;
    for j in 1..i {
        let jf = num::<T>(j);
        let next = ((lit::<T>(2.0) * jf + T::one()) * x * cur - jf * prev) / (jf + T::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of L_i: coefficient of t^h is (-i)_h (i+1)_h / (h!)^2.
pub fn legendre_monomial_coeffs<T: Real>(i: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(i + 1);
    let mut term = T::one();
    out.push(term);
    for h in 0..i {
        let hf = num::<T>(h);
        // ratio of consecutive coefficients
        let numerator = (hf - num::<T>(i)) * (num::<T>(i) + T::one() + hf);
        let denominator = (hf + T::one()) * (hf + T::one());
        term = term * numerator / denominator;
        out.push(term);
    }
    out
}

/// <L_i, L_i> = 1/(2i + 1).
pub fn legendre_norm<T: Real>(i: usize) -> T {
    T::one() / num::<T>(2 * i + 1)
}

/// Linear combination of shifted Legendre polynomials.
///
/// `degree_cap` records the polynomial degree bound n of the containing
/// space; within dual-basis expansions over a spline space the coefficient
/// list may be longer than n + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreCombination<T> {
    pub degree_cap: usize,
    pub coeffs: Vec<T>,
}

impl<T: Real> LegendreCombination<T> {
    pub fn new(degree_cap: usize, coeffs: Vec<T>) -> Self {
        LegendreCombination { degree_cap, coeffs }
    }
}

/// sum c_i L_i(t) by the backward Clenshaw recurrence, O(len) work.
pub fn clenshaw_eval<T: Real>(c: &LegendreCombination<T>, t: T) -> T {
    clenshaw(&c.coeffs, t)
}

pub(crate) fn clenshaw<T: Real>(coeffs: &[T], t: T) -> T {
    if coeffs.is_empty() {
        return T::zero();
    }
    let x = T::one() - lit::<T>(2.0) * t;
    let mut b1 = T::zero();
    let mut b2 = T::zero();
    for k in (0..coeffs.len()).rev() {
        let kf = num::<T>(k);
        let alpha = (lit::<T>(2.0) * kf + T::one()) * x / (kf + T::one());
        let beta_next = -(kf + T::one()) / (kf + lit::<T>(2.0));
        let b0 = coeffs[k] + alpha * b1 + beta_next * b2;
        b2 = b1;
        b1 = b0;
    }
    // L_1 = alpha_0 L_0, so the result collapses to b_0.
    b1
}
