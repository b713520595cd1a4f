//! Least-squares spline approximation: projection through the dual basis,
//! degree reduction, knot removal, error metrics, and conversion to the
//! truncated power form.
//!
//! Optimal control points are plain inner products of the curve components
//! against the dual functions of the target space. Integrands are piecewise
//! polynomials, so quadrature over the merged breakpoints of the two spaces
//! with enough nodes per interval is exact up to rounding.

use std::time::{Duration, Instant};

use crate::bspline::{basis_eval_all, truncated_power_eval, SplineCurve};
use crate::dual::build_dual;
use crate::dual_power::{build_dual_truncated, dual_truncated_eval};
use crate::error::{Result, SplineError};
use crate::knots::KnotVector;
use crate::quadrature::GaussLegendre;
use crate::real::{num, Real};

/// Grid resolution of the max-error metric: the grid is {0, 1/M, ..., 1}.
pub const LINF_GRID: usize = 500;

/// Summary of one approximation run.
#[derive(Debug, Clone)]
pub struct ApproxReport<T> {
    /// L2 distance between source and result.
    pub e2: T,
    /// Max Euclidean distance over the evaluation grid.
    pub einf: T,
    /// Dimension of the source spline space.
    pub source_dim: usize,
    /// Dimension of the target spline space.
    pub target_dim: usize,
    /// Wall-clock time of the projection and error evaluation.
    pub elapsed: Duration,
}

/// L2-optimal projection of a curve onto the spline space over `target_kv`,
/// componentwise: each control point coordinate is the inner product of the
/// curve component with the matching dual function of the target space.
pub fn project_curve<T: Real>(
    c: &SplineCurve<T>,
    target_kv: &KnotVector<T>,
) -> Result<SplineCurve<T>> {
    let dual = build_dual(target_kv)?;
    let d = c.point_dim();
    let target_dim = target_kv.dim();

    let nodes = (c.kv().degree() + target_kv.degree() + 2) / 2;
    let rule = GaussLegendre::new(nodes.max(1));
    let breaks = c.kv().merged_breakpoints(target_kv);

    let mut points = vec![vec![T::zero(); d]; target_dim];
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        for (t, wt) in rule.mapped(a, b) {
            let basis = basis_eval_all(target_kv, t)?;
            let point = c.eval(t)?;
            for (i, target_point) in points.iter_mut().enumerate() {
                let dv = dual
                    .dmat()
                    .row(i)
                    .iter()
                    .zip(&basis)
                    .fold(T::zero(), |acc, (&dc, &bv)| acc + dc * bv);
                if dv == T::zero() {
                    continue;
                }
                for (acc, &coord) in target_point.iter_mut().zip(&point) {
                    *acc += wt * dv * coord;
                }
            }
        }
    }
    SplineCurve::new(target_kv.clone(), points)
}

/// Optimal degree reduction onto the same interior knots.
pub fn degree_reduce<T: Real>(
    c: &SplineCurve<T>,
    n_star: usize,
) -> Result<(SplineCurve<T>, ApproxReport<T>)> {
    let n = c.kv().degree();
    if n_star >= n {
        return Err(SplineError::TargetDegreeNotBelow {
            target: n_star,
            current: n,
        });
    }
    let target = KnotVector::new(n_star, c.kv().interior())?;
    timed_projection(c, &target)
}

/// Optimal removal of interior knots: projection onto the space over `keep`,
/// which must use a sub-multiset of the curve's interior knots at the same
/// degree.
pub fn remove_knots<T: Real>(
    c: &SplineCurve<T>,
    keep: &KnotVector<T>,
) -> Result<(SplineCurve<T>, ApproxReport<T>)> {
    if keep.degree() != c.kv().degree() {
        return Err(SplineError::DegreeMismatch {
            left: keep.degree(),
            right: c.kv().degree(),
        });
    }
    if let Some(position) = c.kv().excess_of(keep) {
        return Err(SplineError::NotASubset { position });
    }
    timed_projection(c, keep)
}

/// Simultaneous degree reduction and knot removal: one projection onto the
/// degree `n_star` space over the interior knots of `keep`.
pub fn reduce_and_remove<T: Real>(
    c: &SplineCurve<T>,
    n_star: usize,
    keep: &KnotVector<T>,
) -> Result<(SplineCurve<T>, ApproxReport<T>)> {
    let n = c.kv().degree();
    if n_star > n {
        return Err(SplineError::TargetDegreeAbove {
            target: n_star,
            current: n,
        });
    }
    if let Some(position) = c.kv().excess_of(keep) {
        return Err(SplineError::NotASubset { position });
    }
    let target = KnotVector::new(n_star, keep.interior())?;
    timed_projection(c, &target)
}

fn timed_projection<T: Real>(
    c: &SplineCurve<T>,
    target: &KnotVector<T>,
) -> Result<(SplineCurve<T>, ApproxReport<T>)> {
    let start = Instant::now();
    let result = project_curve(c, target)?;
    let e2 = l2_error(c, &result)?;
    let einf = linf_error(c, &result, LINF_GRID)?;
    let report = ApproxReport {
        e2,
        einf,
        source_dim: c.kv().dim(),
        target_dim: target.dim(),
        elapsed: start.elapsed(),
    };
    Ok((result, report))
}

/// L2 distance sqrt(int ||a(t) - b(t)||^2 dt) by exact quadrature over the
/// merged breakpoints.
pub fn l2_error<T: Real>(a: &SplineCurve<T>, b: &SplineCurve<T>) -> Result<T> {
    if a.point_dim() != b.point_dim() {
        return Err(SplineError::PointDimensionMismatch);
    }
    let max_degree = a.kv().degree().max(b.kv().degree());
    let rule = GaussLegendre::new(max_degree + 1);
    let breaks = a.kv().merged_breakpoints(b.kv());
    let mut acc = T::zero();
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo {
            continue;
        }
        for (t, wt) in rule.mapped(lo, hi) {
            let pa = a.eval(t)?;
            let pb = b.eval(t)?;
            let dist2 = pa
                .iter()
                .zip(&pb)
                .fold(T::zero(), |s, (&x, &y)| s + (x - y) * (x - y));
            acc += wt * dist2;
        }
    }
    Ok(acc.sqrt())
}

/// Max Euclidean distance over the uniform grid {0, 1/m, ..., 1}.
pub fn linf_error<T: Real>(a: &SplineCurve<T>, b: &SplineCurve<T>, m: usize) -> Result<T> {
    if a.point_dim() != b.point_dim() {
        return Err(SplineError::PointDimensionMismatch);
    }
    let mut worst = T::zero();
    for step in 0..=m {
        let t = num::<T>(step) / num::<T>(m);
        let pa = a.eval(t)?;
        let pb = b.eval(t)?;
        let dist2 = pa
            .iter()
            .zip(&pb)
            .fold(T::zero(), |s, (&x, &y)| s + (x - y) * (x - y));
        worst = worst.max(dist2);
    }
    Ok(worst.sqrt())
}

/// A curve in the truncated power basis {1, t, ..., t^n, (t - t_1)^n_+, ...},
/// one coefficient list per component.
#[derive(Debug, Clone)]
pub struct TruncatedPowerForm<T> {
    pub degree: usize,
    pub knots: Vec<T>,
    pub components: Vec<Vec<T>>,
}

impl<T: Real> TruncatedPowerForm<T> {
    /// Number of basis functions, degree + 1 + number of knots.
    pub fn dim(&self) -> usize {
        self.degree + 1 + self.knots.len()
    }

    pub fn eval_component(&self, j: usize, t: T) -> T {
        let coeffs = &self.components[j];
        let mut value = coeffs[..=self.degree]
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * t + c);
        for (h, &knot) in self.knots.iter().enumerate() {
            value += coeffs[self.degree + 1 + h] * truncated_power_eval(t, knot, self.degree);
        }
        value
    }

    pub fn eval(&self, t: T) -> Vec<T> {
        (0..self.components.len())
            .map(|j| self.eval_component(j, t))
            .collect()
    }
}

/// Re-expresses a curve with simple interior knots in the truncated power
/// basis, using the dual truncated power basis: coefficient i of component j
/// is the inner product of the component with dual function i.
pub fn to_truncated_power<T: Real>(c: &SplineCurve<T>) -> Result<TruncatedPowerForm<T>> {
    if let Some(&(position, multiplicity)) = c.kv().interior().iter().find(|&&(_, m)| m > 1) {
        return Err(SplineError::MultipleInteriorKnots {
            position: position.to_f64().unwrap_or(f64::NAN),
            multiplicity,
        });
    }
    let n = c.kv().degree();
    let knots: Vec<T> = c.kv().interior().iter().map(|&(p, _)| p).collect();
    let state = build_dual_truncated(n, &knots)?;
    let dim = state.dim();
    let d = c.point_dim();

    let rule = GaussLegendre::new(n + 1);
    let breaks = c.kv().breakpoints();
    let mut components = vec![vec![T::zero(); dim]; d];
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        for (t, wt) in rule.mapped(a, b) {
            let point = c.eval(t)?;
            for basis_idx in 0..dim {
                let dv = dual_truncated_eval(&state, basis_idx, t)?;
                if dv == T::zero() {
                    continue;
                }
                for (component, &coord) in components.iter_mut().zip(&point) {
                    component[basis_idx] += wt * dv * coord;
                }
            }
        }
    }
    Ok(TruncatedPowerForm {
        degree: n,
        knots,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_curve() -> SplineCurve<f64> {
        let kv = KnotVector::new(3, &[(0.25, 1), (0.5, 1), (0.75, 1)]).unwrap();
        let points = vec![
            vec![0.0, 0.0],
            vec![0.2, 0.9],
            vec![0.5, -0.3],
            vec![0.7, 0.8],
            vec![0.9, 0.1],
            vec![1.0, 0.5],
            vec![1.2, -0.2],
        ];
        SplineCurve::new(kv, points).unwrap()
    }

    #[test]
    fn projection_onto_own_space_is_identity() {
        let c = sample_curve();
        let p = project_curve(&c, c.kv()).unwrap();
        for (a, b) in p.control_points().iter().zip(c.control_points()) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() <= 1e-9, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn knot_insertion_projects_back() {
        let c = sample_curve();
        // insert extra knots componentwise, then project back
        let finer = KnotVector::new(
            3,
            &[(0.1, 1), (0.25, 1), (0.4, 1), (0.5, 1), (0.75, 1), (0.9, 1)],
        )
        .unwrap();
        let mut comps = Vec::new();
        for j in 0..2 {
            let s = c.component(j);
            comps.push(crate::refine::knot_refine(&s, &finer).unwrap());
        }
        let points: Vec<Vec<f64>> = (0..finer.dim())
            .map(|i| comps.iter().map(|s| s.coeffs()[i]).collect())
            .collect();
        let refined_curve = SplineCurve::new(finer, points).unwrap();
        let back = project_curve(&refined_curve, c.kv()).unwrap();
        for (a, b) in back.control_points().iter().zip(c.control_points()) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn straight_line_reduces_exactly() {
        // a degree-5 representation of a straight line reduces to degree 1
        // with no error
        let kv = KnotVector::<f64>::bezier(5);
        let points: Vec<Vec<f64>> = (0..=5)
            .map(|i| {
                let s = i as f64 / 5.0;
                vec![s, 2.0 * s - 1.0]
            })
            .collect();
        let line = SplineCurve::new(kv, points).unwrap();
        let (_, report) = degree_reduce(&line, 1).unwrap();
        assert!(report.e2 <= 1e-12, "E2 = {}", report.e2);
    }

    #[test]
    fn degree_reduce_validations() {
        let c = sample_curve();
        assert!(matches!(
            degree_reduce(&c, 3),
            Err(SplineError::TargetDegreeNotBelow { .. })
        ));
        assert!(matches!(
            degree_reduce(&c, 5),
            Err(SplineError::TargetDegreeNotBelow { .. })
        ));
    }

    #[test]
    fn remove_knots_identity_and_validation() {
        let c = sample_curve();
        let (same, report) = remove_knots(&c, c.kv()).unwrap();
        assert!(report.e2 <= 1e-12);
        assert_eq!(same.kv(), c.kv());

        let not_subset = KnotVector::new(3, &[(0.3, 1)]).unwrap();
        assert!(matches!(
            remove_knots(&c, &not_subset),
            Err(SplineError::NotASubset { .. })
        ));
        let wrong_degree = KnotVector::new(2, &[(0.25, 1)]).unwrap();
        assert!(matches!(
            remove_knots(&c, &wrong_degree),
            Err(SplineError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn simultaneous_identity() {
        let c = sample_curve();
        let (_, report) = reduce_and_remove(&c, 3, c.kv()).unwrap();
        assert!(report.e2 <= 1e-12);
    }

    #[test]
    fn simultaneous_beats_sequential() {
        let c = sample_curve();
        let keep = KnotVector::new(3, &[(0.5, 1)]).unwrap();
        let (_, simultaneous) = reduce_and_remove(&c, 2, &keep).unwrap();
        // sequential pipeline: reduce degree first, then remove knots
        let (reduced, _) = degree_reduce(&c, 2).unwrap();
        let keep2 = KnotVector::new(2, &[(0.5, 1)]).unwrap();
        let (seq, _) = remove_knots(&reduced, &keep2).unwrap();
        let seq_e2 = l2_error(&c, &seq).unwrap();
        assert!(
            simultaneous.e2 <= seq_e2 + 1e-12,
            "simultaneous {} vs sequential {seq_e2}",
            simultaneous.e2
        );
    }

    #[test]
    fn error_metrics_basics() {
        let c = sample_curve();
        assert!(l2_error(&c, &c).unwrap() <= 1e-13);
        assert_eq!(linf_error(&c, &c, 100).unwrap(), 0.0);

        // constant curves at distance r
        let kv = KnotVector::<f64>::bezier(1);
        let a = SplineCurve::new(kv.clone(), vec![vec![0.0, 0.0]; 2]).unwrap();
        let b = SplineCurve::new(kv, vec![vec![3.0, 4.0]; 2]).unwrap();
        assert!((l2_error(&a, &b).unwrap() - 5.0).abs() <= 1e-13);
        assert!((linf_error(&a, &b, 10).unwrap() - 5.0).abs() <= 1e-15);

        let (l, r) = (l2_error(&a, &b).unwrap(), l2_error(&b, &a).unwrap());
        assert_eq!(l, r);
    }

    #[test]
    fn linf_monotone_in_grid() {
        let c = sample_curve();
        let (reduced, _) = degree_reduce(&c, 2).unwrap();
        let coarse = linf_error(&c, &reduced, 50).unwrap();
        let fine = linf_error(&c, &reduced, 500).unwrap();
        assert!(fine >= coarse - 1e-15);
    }

    #[test]
    fn report_einf_is_the_grid_metric() {
        let c = sample_curve();
        let (reduced, report) = degree_reduce(&c, 2).unwrap();
        assert_eq!(report.einf, linf_error(&c, &reduced, LINF_GRID).unwrap());
        assert_eq!(report.source_dim, 7);
        assert_eq!(report.target_dim, 6);
    }

    #[test]
    fn truncated_power_constant_curve() {
        let kv = KnotVector::new(2, &[(0.5f64, 1)]).unwrap();
        let c = SplineCurve::new(kv, vec![vec![2.5]; 4]).unwrap();
        let f = to_truncated_power(&c).unwrap();
        assert!((f.components[0][0] - 2.5).abs() <= 1e-10);
        for &coef in &f.components[0][1..] {
            assert!(coef.abs() <= 1e-10, "{coef}");
        }
    }

    #[test]
    fn truncated_power_single_segment_cubic() {
        // Bezier cubic: control points in one dimension; the monomial
        // coefficients follow from the Bernstein expansion.
        let kv = KnotVector::<f64>::bezier(3);
        let pts = vec![vec![1.0], vec![2.0], vec![0.5], vec![-1.0]];
        let c = SplineCurve::new(kv, pts).unwrap();
        let f = to_truncated_power(&c).unwrap();
        // Bernstein to monomial: p(t) = sum_k b_k B_{k,3}(t)
        let b = [1.0, 2.0, 0.5, -1.0];
        let want = [
            b[0],
            3.0 * (b[1] - b[0]),
            3.0 * (b[2] - 2.0 * b[1] + b[0]),
            b[3] - 3.0 * b[2] + 3.0 * b[1] - b[0],
        ];
        for (got, want) in f.components[0].iter().zip(&want) {
            assert!((got - want).abs() <= 1e-9, "{got} vs {want}");
        }
    }

    #[test]
    fn truncated_power_round_trip_on_grid() {
        let c = sample_curve();
        let f = to_truncated_power(&c).unwrap();
        let mut worst: f64 = 0.0;
        for step in 0..=LINF_GRID {
            let t = step as f64 / LINF_GRID as f64;
            let p = c.eval(t).unwrap();
            let q = f.eval(t);
            for (x, y) in p.iter().zip(&q) {
                worst = worst.max((x - y).abs());
            }
        }
        assert!(worst <= 1e-8, "round trip error {worst}");
    }

    #[test]
    fn truncated_power_rejects_multiple_knots() {
        let kv = KnotVector::new(3, &[(0.5f64, 2)]).unwrap();
        let c = SplineCurve::new(kv, vec![vec![1.0]; 6]).unwrap();
        assert!(matches!(
            to_truncated_power(&c),
            Err(SplineError::MultipleInteriorKnots { .. })
        ));
    }
}
