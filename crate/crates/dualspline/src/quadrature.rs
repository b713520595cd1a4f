//! Gauss–Legendre quadrature.
//!
//! Every inner product in this crate reduces to integrals of piecewise
//! polynomials, so an exact rule per knot interval is all that is needed:
//! k nodes integrate degree 2k-1 exactly.

use crate::real::{lit, num, Real};

/// Gauss–Legendre rule on a reference interval.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    /// Rule with `k >= 1` nodes, exact for polynomials of degree `2k - 1`.
    ///
    /// Nodes are the roots of the Legendre polynomial P_k on [-1, 1], found
    /// by Newton iteration from the Chebyshev-like initial guesses.
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "quadrature needs at least one node");
        let mut nodes = vec![T::zero(); k];
        let mut weights = vec![T::zero(); k];
        let tol = T::epsilon() * lit(4.0);
        for i in 0..k {
            let theta = T::PI() * (num::<T>(i) + lit(0.75)) / (num::<T>(k) + lit(0.5));
            let mut x = theta.cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(k, x);
                let step = p / d;
                x -= step;
                if step.abs() <= tol {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(k, x);
            nodes[i] = x;
            weights[i] = lit::<T>(2.0) / ((T::one() - x * x) * dp * dp);
        }
        nodes.reverse();
        weights.reverse();
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F: FnMut(T) -> T>(&self, a: T, b: T, mut f: F) -> T {
        let half = lit::<T>(0.5);
        let mid = (a + b) * half;
        let scale = (b - a) * half;
        let mut acc = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + scale * x);
        }
        acc * scale
    }

    /// Mapped nodes and scaled weights on `[a, b]`.
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let half = lit::<T>(0.5);
        let mid = (a + b) * half;
        let scale = (b - a) * half;
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + scale * x, w * scale))
    }
}

/// (P_k(x), P_k'(x)) by the three-term recurrence.
fn legendre_with_derivative<T: Real>(k: usize, x: T) -> (T, T) {
    let mut prev = T::one();
    let mut cur = x;
    if k == 0 {
        return (T::one(), T::zero());
    }
    for j in 1..k {
        let jf = num::<T>(j);
        let next = ((lit::<T>(2.0) * jf + T::one()) * x * cur - jf * prev) / (jf + T::one());
        prev = cur;
        cur = next;
    }
    // P_k'(x) = k (x P_k - P_{k-1}) / (x^2 - 1)
    let deriv = num::<T>(k) * (x * cur - prev) / (x * x - T::one());
    (cur, deriv)
}
