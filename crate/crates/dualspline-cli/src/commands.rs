//! Command implementations and the exit-code policy:
//! 0 success, 1 file/parse, 2 validation, 3 numerical failure.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dualspline::{
    build_dual, gram_bsplines, reduce_and_remove, remove_knots, to_truncated_power, KnotVector64,
    Mat, SplineCurve64, SplineError, LINF_GRID,
};

use crate::document::{CurveDocument, PowerDocument};
use crate::pear;
use crate::svg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

/// Residual bound for the duality self-check.
const CHECK_TOLERANCE: f64 = 1e-8;

fn error_code(err: &SplineError) -> u8 {
    if err.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_VALIDATION
    }
}

fn load_document(path: &Path) -> Result<CurveDocument, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_IO
    })?;
    serde_json::from_str(&text).map_err(|e| {
        eprintln!("error: cannot parse {}: {e}", path.display());
        EXIT_IO
    })
}

fn curve_from_document(doc: &CurveDocument) -> Result<SplineCurve64, u8> {
    doc.curve().map_err(|e| {
        eprintln!("error: invalid curve document: {e}");
        error_code(&e)
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), u8> {
    fs::write(path, text).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_IO
    })
}

fn write_document(path: &Path, doc: &CurveDocument) -> Result<(), u8> {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    write_text(path, &text)
}

/// Interior knots left after dropping one occurrence per listed value.
fn drop_interior(kv: &KnotVector64, drops: &[f64]) -> Result<Vec<(f64, usize)>, u8> {
    let mut interior: Vec<(f64, usize)> = kv.interior().to_vec();
    for &d in drops {
        match interior.iter_mut().find(|(p, m)| *p == d && *m > 0) {
            Some(entry) => entry.1 -= 1,
            None => {
                eprintln!("error: knot {d} is not present (or already removed)");
                return Err(EXIT_VALIDATION);
            }
        }
    }
    Ok(interior.into_iter().filter(|&(_, m)| m > 0).collect())
}

/// Interior knots restricted to the listed positions.
fn keep_interior(kv: &KnotVector64, keeps: &[f64]) -> Result<Vec<(f64, usize)>, u8> {
    for &kpos in keeps {
        if !kv.interior().iter().any(|&(p, _)| p == kpos) {
            eprintln!("error: knot {kpos} is not present in the input curve");
            return Err(EXIT_VALIDATION);
        }
    }
    Ok(kv
        .interior()
        .iter()
        .copied()
        .filter(|(p, _)| keeps.contains(p))
        .collect())
}

fn print_report(e2: f64, einf: f64) {
    println!("E2 = {e2:.2e}");
    println!("Einf = {einf:.2e}");
}

fn maybe_write_svg(
    svg_path: Option<&Path>,
    original: &SplineCurve64,
    result: &SplineCurve64,
    polygons: bool,
) -> Result<(), u8> {
    if let Some(path) = svg_path {
        if original.point_dim() < 2 {
            eprintln!("error: SVG output needs planar (or higher-dimensional) curves");
            return Err(EXIT_VALIDATION);
        }
        write_text(path, &svg::two_curve_overlay(original, result, polygons))?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_reduce(
    input: &Path,
    degree: usize,
    keep_knots: Option<&[f64]>,
    drop_knots: Option<&[f64]>,
    out: &Path,
    svg_path: Option<&Path>,
    svg_polygons: bool,
) -> u8 {
    match run_reduce(
        input,
        degree,
        keep_knots,
        drop_knots,
        out,
        svg_path,
        svg_polygons,
    ) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_reduce(
    input: &Path,
    degree: usize,
    keep_knots: Option<&[f64]>,
    drop_knots: Option<&[f64]>,
    out: &Path,
    svg_path: Option<&Path>,
    svg_polygons: bool,
) -> Result<(), u8> {
    let doc = load_document(input)?;
    let curve = curve_from_document(&doc)?;

    let interior = if let Some(drops) = drop_knots {
        drop_interior(curve.kv(), drops)?
    } else if let Some(keeps) = keep_knots {
        keep_interior(curve.kv(), keeps)?
    } else {
        curve.kv().interior().to_vec()
    };
    let keep = KnotVector64::new(curve.kv().degree(), &interior).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;

    let (result, report) = reduce_and_remove(&curve, degree, &keep).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;

    write_document(out, &CurveDocument::from_curve(&result, doc.name.clone()))?;
    maybe_write_svg(svg_path, &curve, &result, svg_polygons)?;
    print_report(report.e2, report.einf);
    Ok(())
}

pub fn cmd_remove_knots(
    input: &Path,
    drop_knots: &[f64],
    out: &Path,
    svg_path: Option<&Path>,
    svg_polygons: bool,
) -> u8 {
    match run_remove_knots(input, drop_knots, out, svg_path, svg_polygons) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}

fn run_remove_knots(
    input: &Path,
    drop_knots: &[f64],
    out: &Path,
    svg_path: Option<&Path>,
    svg_polygons: bool,
) -> Result<(), u8> {
    let doc = load_document(input)?;
    let curve = curve_from_document(&doc)?;
    let interior = drop_interior(curve.kv(), drop_knots)?;
    let keep = KnotVector64::new(curve.kv().degree(), &interior).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;
    let (result, report) = remove_knots(&curve, &keep).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;
    write_document(out, &CurveDocument::from_curve(&result, doc.name.clone()))?;
    maybe_write_svg(svg_path, &curve, &result, svg_polygons)?;
    print_report(report.e2, report.einf);
    Ok(())
}

pub fn cmd_check(input: Option<&Path>, random: Option<&[u64]>) -> u8 {
    let kv = match (input, random) {
        (_, Some(params)) => {
            let (n, m, seed) = (params[0] as usize, params[1] as usize, params[2]);
            random_knot_vector(n, m, seed)
        }
        (Some(path), None) => {
            let doc = match load_document(path) {
                Ok(d) => d,
                Err(code) => return code,
            };
            match doc.knot_vector() {
                Ok(kv) => kv,
                Err(e) => {
                    eprintln!("error: invalid knot vector: {e}");
                    return error_code(&e);
                }
            }
        }
        (None, None) => {
            eprintln!("error: check needs an input document or --random N M SEED");
            return EXIT_VALIDATION;
        }
    };

    let dual = match build_dual(&kv) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: dual basis construction failed: {e}");
            return error_code(&e);
        }
    };
    let g = gram_bsplines(&kv);
    let residual = dual
        .dmat()
        .matmul(g.entries())
        .max_abs_diff(&Mat::identity(kv.dim()));
    println!(
        "degree {} with {} interior knots: max |D G - I| = {residual:.2e}",
        kv.degree(),
        kv.interior_count()
    );
    if residual <= CHECK_TOLERANCE {
        EXIT_OK
    } else {
        eprintln!("error: duality residual above {CHECK_TOLERANCE:.0e}");
        EXIT_NUMERICAL
    }
}

/// Seeded knot vector with `m` interior knots counted with multiplicity,
/// multiplicities up to the degree.
pub fn random_knot_vector(n: usize, m: usize, seed: u64) -> KnotVector64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut interior: Vec<(f64, usize)> = Vec::new();
    let mut remaining = if n == 0 { 0 } else { m };
    while remaining > 0 {
        let pos = rng.gen_range(0.02..0.98);
        if interior.iter().any(|&(p, _)| (p - pos).abs() < 0.01) {
            continue;
        }
        let mult = rng.gen_range(1..=n.min(remaining));
        interior.push((pos, mult));
        remaining -= mult;
    }
    interior.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    KnotVector64::new(n, &interior).expect("generated vector is valid")
}

pub fn cmd_convert_power(input: &Path, out: &Path, verify: bool) -> u8 {
    match run_convert_power(input, out, verify) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}

fn run_convert_power(input: &Path, out: &Path, verify: bool) -> Result<(), u8> {
    let doc = load_document(input)?;
    let curve = curve_from_document(&doc)?;
    let form = to_truncated_power(&curve).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;
    let power_doc = PowerDocument {
        name: doc.name.clone(),
        degree: form.degree,
        knots: form.knots.clone(),
        components: form.components.clone(),
    };
    let mut text = serde_json::to_string_pretty(&power_doc).expect("documents serialize");
    text.push('\n');
    write_text(out, &text)?;

    if verify {
        let mut worst: f64 = 0.0;
        for step in 0..=LINF_GRID {
            let t = step as f64 / LINF_GRID as f64;
            let p = curve.eval(t).expect("grid point inside [0, 1]");
            let q = form.eval(t);
            for (x, y) in p.iter().zip(&q) {
                worst = worst.max((x - y).abs());
            }
        }
        println!("max round-trip error = {worst:.2e}");
        if worst > 1e-8 {
            eprintln!("error: conversion round trip above 1e-8");
            return Err(EXIT_NUMERICAL);
        }
    }
    Ok(())
}

struct Experiment {
    label: &'static str,
    stem: &'static str,
    degree: usize,
    drop: &'static [usize],
    expected_e2: f64,
    expected_einf: f64,
}

const EXPERIMENTS: [Experiment; 4] = [
    Experiment {
        label: "knot removal, 7 knots dropped",
        stem: "remove7",
        degree: 5,
        drop: &[1, 4, 7, 10, 13, 16, 19],
        expected_e2: 1.08e-2,
        expected_einf: 2.95e-2,
    },
    Experiment {
        label: "knot removal, 4 knots dropped",
        stem: "remove4",
        degree: 5,
        drop: &[4, 7, 13, 16],
        expected_e2: 3.58e-3,
        expected_einf: 7.92e-3,
    },
    Experiment {
        label: "degree reduction to 3",
        stem: "reduce3",
        degree: 3,
        drop: &[],
        expected_e2: 2.76e-3,
        expected_einf: 3.41e-2,
    },
    Experiment {
        label: "degree reduction to 4 + removal of 3 knots",
        stem: "reduce4_remove3",
        degree: 4,
        drop: &[4, 13, 16],
        expected_e2: 4.64e-3,
        expected_einf: 1.55e-2,
    },
];

/// Agreement to three significant digits, allowing one unit in the third.
pub fn matches_3_significant(value: f64, reference: f64) -> bool {
    let ulp3 = 10f64.powf(reference.abs().log10().floor() - 2.0);
    (value - reference).abs() <= ulp3
}

pub fn cmd_pear_demo(outdir: &Path) -> u8 {
    match run_pear_demo(outdir) {
        Ok(all_matched) => {
            if all_matched {
                EXIT_OK
            } else {
                eprintln!("error: at least one experiment missed its reference errors");
                EXIT_NUMERICAL
            }
        }
        Err(code) => code,
    }
}

fn run_pear_demo(outdir: &Path) -> Result<bool, u8> {
    fs::create_dir_all(outdir).map_err(|e| {
        eprintln!("error: cannot create {}: {e}", outdir.display());
        EXIT_IO
    })?;

    let curve = pear::pear_curve();
    write_document(
        &outdir.join("pear.json"),
        &CurveDocument::from_curve(&curve, Some("Pear".into())),
    )?;

    let mut summary = String::from("experiment                                    E2        Einf      reference           status\n");
    let mut all_matched = true;
    for exp in &EXPERIMENTS {
        let drops: Vec<f64> = exp.drop.iter().map(|&k| k as f64 / 20.0).collect();
        let interior = drop_interior(curve.kv(), &drops)?;
        let keep = KnotVector64::new(curve.kv().degree(), &interior).expect("subset is valid");
        let (result, report) = reduce_and_remove(&curve, exp.degree, &keep).map_err(|e| {
            eprintln!("error: {e}");
            error_code(&e)
        })?;

        let ok = matches_3_significant(report.e2, exp.expected_e2)
            && matches_3_significant(report.einf, exp.expected_einf);
        all_matched &= ok;

        write_document(
            &outdir.join(format!("{}.json", exp.stem)),
            &CurveDocument::from_curve(&result, Some(format!("Pear ({})", exp.label))),
        )?;
        write_text(
            &outdir.join(format!("{}.svg", exp.stem)),
            &svg::two_curve_overlay(&curve, &result, false),
        )?;

        summary.push_str(&format!(
            "{:<44}  {:.2e}  {:.2e}  {:.2e} / {:.2e}  {}\n",
            exp.label,
            report.e2,
            report.einf,
            exp.expected_e2,
            exp.expected_einf,
            if ok { "ok" } else { "MISMATCH" }
        ));
    }

    print!("{summary}");
    write_text(&outdir.join("summary.txt"), &summary)?;
    Ok(all_matched)
}
