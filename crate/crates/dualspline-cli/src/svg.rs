//! Static SVG overlays of two planar curves: input solid blue, result
//! dashed red, optional control polygons in gray.

use dualspline::{SplineCurve64, LINF_GRID};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;
const MARGIN: f64 = 24.0;

pub fn two_curve_overlay(
    original: &SplineCurve64,
    result: &SplineCurve64,
    polygons: bool,
) -> String {
    let orig_pts = sample(original);
    let res_pts = sample(result);

    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for p in orig_pts.iter().chain(&res_pts) {
        for axis in 0..2 {
            min[axis] = min[axis].min(p[axis]);
            max[axis] = max[axis].max(p[axis]);
        }
    }
    if polygons {
        for p in original
            .control_points()
            .iter()
            .chain(result.control_points())
        {
            for axis in 0..2 {
                min[axis] = min[axis].min(p[axis]);
                max[axis] = max[axis].max(p[axis]);
            }
        }
    }
    let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-12);
    let scale = (WIDTH - 2.0 * MARGIN) / span;
    // y axis points up in curve coordinates, down in SVG
    let map = move |p: &[f64]| -> (f64, f64) {
        (
            MARGIN + (p[0] - min[0]) * scale,
            HEIGHT - MARGIN - (p[1] - min[1]) * scale,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    ));
    out.push('\n');
    if polygons {
        out.push_str(&polyline(
            &original
                .control_points()
                .iter()
                .map(|p| map(p))
                .collect::<Vec<_>>(),
            "stroke=\"#b0b0b0\" stroke-width=\"1\" fill=\"none\"",
        ));
        out.push_str(&polyline(
            &result
                .control_points()
                .iter()
                .map(|p| map(p))
                .collect::<Vec<_>>(),
            "stroke=\"#d8c0c0\" stroke-width=\"1\" fill=\"none\"",
        ));
    }
    out.push_str(&polyline(
        &orig_pts.iter().map(|p| map(p)).collect::<Vec<_>>(),
        "stroke=\"blue\" stroke-width=\"2\" fill=\"none\"",
    ));
    out.push_str(&polyline(
        &res_pts.iter().map(|p| map(p)).collect::<Vec<_>>(),
        "stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"7,5\" fill=\"none\"",
    ));
    out.push_str("</svg>\n");
    out
}

fn sample(curve: &SplineCurve64) -> Vec<Vec<f64>> {
    (0..=LINF_GRID)
        .map(|k| {
            let t = k as f64 / LINF_GRID as f64;
            let p = curve.eval(t).expect("grid point inside [0, 1]");
            vec![p[0], p.get(1).copied().unwrap_or(0.0)]
        })
        .collect()
}

fn polyline(points: &[(f64, f64)], style: &str) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{x:.2} {y:.2} "));
    }
    format!("<path d=\"{}\" {style}/>\n", d.trim_end())
}
