//! The bundled "Pear" demo curve: a degree-5 planar B-spline over the
//! uniform interior knots k/20, k = 1..19.

use dualspline::{KnotVector64, SplineCurve64};

pub const PEAR_DEGREE: usize = 5;

pub const PEAR_POINTS: [[f64; 2]; 25] = [
    [0.385, 0.845],
    [0.325, 0.76],
    [0.305, 0.635],
    [0.275, 0.79],
    [0.295, 0.895],
    [0.025, 0.885],
    [0.035, 0.79],
    [0.11, 0.71],
    [0.405, 0.705],
    [0.2, 0.675],
    [0.1, 0.59],
    [0.185, 0.365],
    [0.01, 0.45],
    [0.01, 0.045],
    [0.13, 0.02],
    [0.4, 0.005],
    [0.625, 0.045],
    [0.67, 0.185],
    [0.655, 0.395],
    [0.47, 0.405],
    [0.535, 0.51],
    [0.47, 0.645],
    [0.39, 0.71],
    [0.285, 0.665],
    [0.395, 0.835],
];

pub fn pear_knot_vector() -> KnotVector64 {
    let interior: Vec<(f64, usize)> = (1..=19).map(|k| (k as f64 / 20.0, 1)).collect();
    KnotVector64::new(PEAR_DEGREE, &interior).expect("the demo knot vector is valid")
}

pub fn pear_curve() -> SplineCurve64 {
    let points = PEAR_POINTS.iter().map(|p| p.to_vec()).collect();
    SplineCurve64::new(pear_knot_vector(), points).expect("the demo curve is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_at_first_control_point() {
        let c = pear_curve();
        let p = c.eval(0.0).unwrap();
        assert!((p[0] - 0.385).abs() < 1e-15);
        assert!((p[1] - 0.845).abs() < 1e-15);
    }

    #[test]
    fn dimension_checks() {
        let kv = pear_knot_vector();
        assert_eq!(kv.full().len(), 31);
        assert_eq!(kv.dim(), 25);
    }
}
