//! B-spline basis evaluation and spline/curve containers.

use crate::error::{Result, SplineError};
use crate::knots::KnotVector;
use crate::real::Real;

/// Scalar-valued spline stored by its B-spline coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Spline<T> {
    kv: KnotVector<T>,
    coeffs: Vec<T>,
}

impl<T: Real> Spline<T> {
    pub fn new(kv: KnotVector<T>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != kv.dim() {
            return Err(SplineError::CoefficientCount {
                got: coeffs.len(),
                expected: kv.dim(),
            });
        }
        Ok(Spline { kv, coeffs })
    }

    pub fn kv(&self) -> &KnotVector<T> {
        &self.kv
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, t: T) -> Result<T> {
        let basis = basis_eval_all(&self.kv, t)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&basis)
            .fold(T::zero(), |acc, (&c, &b)| acc + c * b))
    }

    /// Integral over [0, 1]: each basis function integrates to its support
    /// length over degree + 1.
    pub fn integral(&self) -> T {
        let n1 = crate::real::num::<T>(self.kv.degree() + 1);
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, &c)| {
                let (a, b) = self.kv.support(i);
                acc + c * (b - a) / n1
            })
    }
}

/// Spline curve in R^d stored by its control points.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineCurve<T> {
    kv: KnotVector<T>,
    control_points: Vec<Vec<T>>,
    dim: usize,
}

impl<T: Real> SplineCurve<T> {
    pub fn new(kv: KnotVector<T>, control_points: Vec<Vec<T>>) -> Result<Self> {
        if control_points.len() != kv.dim() {
            return Err(SplineError::CoefficientCount {
                got: control_points.len(),
                expected: kv.dim(),
            });
        }
        let dim = control_points.first().map_or(0, Vec::len);
        if dim == 0 || control_points.iter().any(|p| p.len() != dim) {
            return Err(SplineError::PointDimensionMismatch);
        }
        Ok(SplineCurve {
            kv,
            control_points,
            dim,
        })
    }

    pub fn kv(&self) -> &KnotVector<T> {
        &self.kv
    }

    pub fn control_points(&self) -> &[Vec<T>] {
        &self.control_points
    }

    /// Dimension d of the ambient space.
    pub fn point_dim(&self) -> usize {
        self.dim
    }

    /// Scalar spline of coordinate `j`.
    pub fn component(&self, j: usize) -> Spline<T> {
        assert!(j < self.dim);
        Spline::new(
            self.kv.clone(),
            self.control_points.iter().map(|p| p[j]).collect(),
        )
        .expect("component of a valid curve is valid")
    }

    pub fn eval(&self, t: T) -> Result<Vec<T>> {
        curve_eval(self, t)
    }
}

/// Values of every basis function at `t`, left-limits at t = 1 so the last
/// basis function is 1 there.
pub fn basis_eval_all<T: Real>(kv: &KnotVector<T>, t: T) -> Result<Vec<T>> {
    if !(t >= T::zero() && t <= T::one()) {
        return Err(SplineError::ParameterOutOfRange {
            t: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    let n = kv.degree();
    let dim = kv.dim();
    let full = kv.full();
    let span = find_span(kv, t);

    // Triangular scheme over the n+1 basis functions alive on the span.
    let mut values = vec![T::zero(); n + 1];
    let mut left = vec![T::zero(); n + 1];
    let mut right = vec![T::zero(); n + 1];
    values[0] = T::one();
    for j in 1..=n {
        left[j] = t - full[span + 1 - j];
        right[j] = full[span + j] - t;
        let mut saved = T::zero();
        for r in 0..j {
            let temp = values[r] / (right[r + 1] + left[j - r]);
            values[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        values[j] = saved;
    }

    let mut out = vec![T::zero(); dim];
    for (r, &v) in values.iter().enumerate() {
        out[span - n + r] = v;
    }
    Ok(out)
}

/// Index q of the interval [full[q], full[q+1]) containing t, with t = 1
/// assigned to the last nonempty interval.
pub(crate) fn find_span<T: Real>(kv: &KnotVector<T>, t: T) -> usize {
    let n = kv.degree();
    let last = n + kv.interior_count();
    if t >= T::one() {
        return last;
    }
    let full = kv.full();
    let mut span = n;
    while span < last && full[span + 1] <= t {
        span += 1;
    }
    span
}

/// Point on a spline curve.
pub fn curve_eval<T: Real>(curve: &SplineCurve<T>, t: T) -> Result<Vec<T>> {
    let basis = basis_eval_all(curve.kv(), t)?;
    let mut point = vec![T::zero(); curve.point_dim()];
    for (b, p) in basis.iter().zip(curve.control_points()) {
        if *b != T::zero() {
            for (acc, &coord) in point.iter_mut().zip(p) {
                *acc += *b * coord;
            }
        }
    }
    Ok(point)
}

/// Truncated power (x - knot)^p for x > knot, else 0.
///
/// The p = 0 case is the right-open step: 0 at x = knot.
pub fn truncated_power_eval<T: Real>(x: T, knot: T, p: usize) -> T {
    if x > knot {
        (x - knot).powi(p as i32)
    } else {
        T::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hat_kv() -> KnotVector<f64> {
        KnotVector::new(1, &[(0.5, 1)]).unwrap()
    }

    #[test]
    fn degree_zero_constant() {
        let kv = KnotVector::<f64>::bezier(0);
        for &t in &[0.0, 0.3, 0.999, 1.0] {
            assert_eq!(basis_eval_all(&kv, t).unwrap(), vec![1.0]);
        }
    }

    #[test]
    fn hat_function_peak() {
        let vals = basis_eval_all(&hat_kv(), 0.5).unwrap();
        assert_eq!(vals, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn left_limit_at_one() {
        let kv = KnotVector::new(3, &[(0.25f64, 1), (0.75, 2)]).unwrap();
        let vals = basis_eval_all(&kv, 1.0).unwrap();
        assert!((vals.last().unwrap() - 1.0).abs() < 1e-15);
        assert!((vals.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range_parameter() {
        assert!(basis_eval_all(&hat_kv(), -0.01).is_err());
        assert!(basis_eval_all(&hat_kv(), 1.01).is_err());
    }

    #[test]
    fn local_support() {
        let kv = KnotVector::new(2, &[(0.3, 1), (0.6, 1)]).unwrap();
        for step in 0..=100 {
            let t = step as f64 / 100.0;
            let vals = basis_eval_all(&kv, t).unwrap();
            for (i, &v) in vals.iter().enumerate() {
                let (a, b) = kv.support(i);
                if (t < a || t > b) && v != 0.0 {
                    panic!("basis {i} nonzero at {t} outside [{a}, {b}]");
                }
            }
        }
    }

    #[test]
    fn constant_control_points_reproduce_point() {
        let kv = KnotVector::new(3, &[(0.2, 1), (0.5, 2)]).unwrap();
        let p = vec![1.5, -2.0];
        let curve = SplineCurve::new(kv, vec![p.clone(); 7]).unwrap();
        for step in 0..=20 {
            let t = step as f64 / 20.0;
            let q = curve.eval(t).unwrap();
            assert!((q[0] - p[0]).abs() < 1e-14);
            assert!((q[1] - p[1]).abs() < 1e-14);
        }
    }

    #[test]
    fn linear_bezier_interpolates() {
        let kv = KnotVector::<f64>::bezier(1);
        let curve = SplineCurve::new(kv, vec![vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let mid = curve.eval(0.5).unwrap();
        assert_eq!(mid, vec![0.5, 0.5]);
    }

    #[test]
    fn truncated_power_cases() {
        assert!((truncated_power_eval(0.7f64, 0.5, 2) - 0.04).abs() < 1e-15);
        assert_eq!(truncated_power_eval(0.5, 0.5, 0), 0.0);
        assert_eq!(truncated_power_eval(0.3, 0.5, 3), 0.0);
        assert_eq!(truncated_power_eval(0.6, 0.5, 0), 1.0);
    }

    #[test]
    fn spline_integral_matches_quadrature() {
        let kv = KnotVector::new(3, &[(0.4f64, 2)]).unwrap();
        let s = Spline::new(kv, vec![0.2, -1.0, 0.7, 0.1, 0.9, -0.3]).unwrap();
        let rule = crate::quadrature::GaussLegendre::new(4);
        let mut total = 0.0;
        for (a, b) in s.kv().spans() {
            total += rule.integrate(a, b, |t| s.eval(t).unwrap());
        }
        assert!((s.integral() - total).abs() < 1e-14);
    }

    #[test]
    fn coefficient_count_checked() {
        let kv = KnotVector::<f64>::bezier(2);
        assert!(matches!(
            Spline::new(kv, vec![1.0, 2.0]),
            Err(SplineError::CoefficientCount { .. })
        ));
    }

    proptest! {
        #[test]
        fn partition_of_unity(
            degree in 0usize..6,
            knots in proptest::collection::vec(0.01f64..0.99, 0..6),
            t in 0.0f64..=1.0,
        ) {
            let mut sorted = knots;
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            sorted.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
            let interior: Vec<(f64, usize)> = if degree == 0 {
                vec![]
            } else {
                sorted.iter().map(|&p| (p, 1)).collect()
            };
            let kv = KnotVector::new(degree, &interior).unwrap();
            let vals = basis_eval_all(&kv, t).unwrap();
            let sum: f64 = vals.iter().sum();
            prop_assert!((sum - 1.0).abs() <= 1e-12);
            prop_assert!(vals.iter().all(|&v| v >= -1e-15));
        }
    }
}
