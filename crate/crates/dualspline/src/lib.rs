//! Dual bases for polynomial spline spaces on [0, 1] and their use in
//! least-squares curve approximation.
//!
//! The crate builds three families of objects over a clamped knot vector:
//!
//! * an orthogonal (Legendre-like) basis of the spline space in B-spline
//!   coordinates ([`extend_orthogonal`]),
//! * the dual basis of the B-spline basis under the L2 inner product
//!   ([`build_dual`]), and
//! * the dual basis of the truncated power basis for simple interior knots
//!   ([`build_dual_truncated`]).
//!
//! On top of these sit the approximation routines: [`degree_reduce`],
//! [`remove_knots`], [`reduce_and_remove`], and [`to_truncated_power`], all
//! of which compute L2-optimal results through plain inner products with
//! dual functions.
//!
//! Everything is generic over the scalar through the [`Real`] trait;
//! the `*64` aliases pin `f64`, which the stated tolerances assume.

mod bspline;
mod divdiff;
mod dual;
mod dual_power;
mod error;
mod gram;
mod knots;
mod legendre;
mod matrix;
mod ortho;
mod polar;
mod quadrature;
mod real;
mod refine;

pub mod approx;

pub use bspline::{basis_eval_all, curve_eval, truncated_power_eval, Spline, SplineCurve};
pub use divdiff::{admissible_point, deriv_np1_bspline, gamma_cross_check, lambda_table};
pub use dual::{bspline_to_orthogonal, build_dual, build_dual_from, dual_eval, DualBasisMatrix};
pub use dual_power::{
    build_dual_truncated, dual_power_basis, dual_truncated_eval, extend_dual_truncated,
    truncated_self_product, v_moment_vector, v_truncated_pair, TruncatedDualState,
};
pub use error::{Result, SplineError};
pub use gram::{gram_bsplines, GramMatrix};
pub use knots::KnotVector;
pub use legendre::{
    clenshaw_eval, hyp2f1_terminating, legendre_monomial_coeffs, legendre_norm, pochhammer,
    shifted_legendre_eval, LegendreCombination,
};
pub use matrix::Mat;
pub use ortho::{extend_orthogonal, legendre_rows, orthogonality_residual, OrthoSplineBasis};
pub use polar::{elementary_symmetric, monic_from_roots};
pub use quadrature::GaussLegendre;
pub use real::Real;
pub use refine::{knot_refine, refinement_matrix};

pub use approx::{
    degree_reduce, l2_error, linf_error, project_curve, reduce_and_remove, remove_knots,
    to_truncated_power, ApproxReport, TruncatedPowerForm, LINF_GRID,
};

/// `f64` instantiations, the default working precision.
pub type KnotVector64 = KnotVector<f64>;
pub type Spline64 = Spline<f64>;
pub type SplineCurve64 = SplineCurve<f64>;
pub type GramMatrix64 = GramMatrix<f64>;
pub type OrthoSplineBasis64 = OrthoSplineBasis<f64>;
pub type DualBasisMatrix64 = DualBasisMatrix<f64>;
pub type TruncatedDualState64 = TruncatedDualState<f64>;
pub type LegendreCombination64 = LegendreCombination<f64>;
pub type TruncatedPowerForm64 = TruncatedPowerForm<f64>;
pub type ApproxReport64 = ApproxReport<f64>;

/// `f32` instantiations, for callers trading precision for space.
pub type KnotVector32 = KnotVector<f32>;
pub type Spline32 = Spline<f32>;
pub type SplineCurve32 = SplineCurve<f32>;
pub type GramMatrix32 = GramMatrix<f32>;
pub type OrthoSplineBasis32 = OrthoSplineBasis<f32>;
pub type DualBasisMatrix32 = DualBasisMatrix<f32>;
pub type TruncatedDualState32 = TruncatedDualState<f32>;
