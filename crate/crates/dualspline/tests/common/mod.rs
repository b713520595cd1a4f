//! Shared fixtures and oracles for the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use dualspline::{KnotVector64, SplineCurve64};

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

pub fn pear_curve() -> SplineCurve64 {
    let interior: Vec<(f64, usize)> = (1..=19).map(|k| (k as f64 / 20.0, 1)).collect();
    let kv = KnotVector64::new(5, &interior).unwrap();
    SplineCurve64::new(kv, PEAR_POINTS.iter().map(|p| p.to_vec()).collect()).unwrap()
}

/// Interior knots of the Pear vector minus the listed twentieths.
pub fn pear_keep(drops: &[usize]) -> KnotVector64 {
    let interior: Vec<(f64, usize)> = (1..=19)
        .filter(|k| !drops.contains(k))
        .map(|k| (k as f64 / 20.0, 1))
        .collect();
    KnotVector64::new(5, &interior).unwrap()
}

/// Agreement to three significant digits, allowing one unit in the third.
pub fn matches_3_significant(value: f64, reference: f64) -> bool {
    let ulp3 = 10f64.powf(reference.abs().log10().floor() - 2.0);
    (value - reference).abs() <= ulp3
}

/// Seeded knot vector with multiplicities up to the degree; positions keep a
/// minimum gap of 0.01 so the spaces stay representable.
pub fn random_knot_vector(rng: &mut ChaCha8Rng, degree: usize, target_m: usize) -> KnotVector64 {
    let mut interior: Vec<(f64, usize)> = Vec::new();
    let mut remaining = if degree == 0 { 0 } else { target_m };
    while remaining > 0 {
        let pos = rng.gen_range(0.02..0.98);
        if interior.iter().any(|&(p, _)| (p - pos).abs() < 0.01) {
            continue;
        }
        let mult = rng.gen_range(1..=degree.min(remaining));
        interior.push((pos, mult));
        remaining -= mult;
    }
    interior.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    KnotVector64::new(degree, &interior).unwrap()
}

/// Seeded random control points.
pub fn random_curve(rng: &mut ChaCha8Rng, kv: &KnotVector64, dim: usize) -> SplineCurve64 {
    let points = (0..kv.dim())
        .map(|_| (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect();
    SplineCurve64::new(kv.clone(), points).unwrap()
}

/// Gauss-Jordan inversion with partial pivoting; the independent oracle for
/// every D = G^{-1} comparison.
pub fn invert(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut work: Vec<Vec<f64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| work[p][col].abs().partial_cmp(&work[q][col].abs()).unwrap())
            .unwrap();
        work.swap(col, pivot);
        let inv = 1.0 / work[col][col];
        for x in work[col].iter_mut() {
            *x *= inv;
        }
        for row in 0..n {
            if row != col {
                let f = work[row][col];
                for c in 0..2 * n {
                    let v = work[col][c];
                    work[row][c] -= f * v;
                }
            }
        }
    }
    work.iter().map(|r| r[n..].to_vec()).collect()
}

/// Matrix of Gram entries as nested vectors, for the inversion oracle.
pub fn gram_as_rows(g: &dualspline::GramMatrix64) -> Vec<Vec<f64>> {
    (0..g.dim())
        .map(|i| (0..g.dim()).map(|j| g.entry(i, j)).collect())
        .collect()
}
