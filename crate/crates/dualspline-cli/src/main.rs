mod commands;
mod document;
mod pear;
mod svg;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Spline approximation toolkit: L2-optimal degree reduction and knot
/// removal for B-spline curves, duality self-checks, and conversion to the
/// truncated power basis.
#[derive(Parser)]
#[command(name = "dualspline", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce the degree of a curve (optionally dropping knots as well).
    Reduce {
        /// Input curve document (JSON).
        input: PathBuf,
        /// Target degree.
        #[arg(long)]
        degree: usize,
        /// Interior knots to keep, comma-separated decimals.
        #[arg(long, value_delimiter = ',', conflicts_with = "drop_knots")]
        keep_knots: Option<Vec<f64>>,
        /// Interior knots to drop, comma-separated decimals.
        #[arg(long, value_delimiter = ',')]
        drop_knots: Option<Vec<f64>>,
        /// Output curve document.
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG overlay of input (solid) and result (dashed).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw control polygons in the SVG.
        #[arg(long, requires = "svg")]
        svg_polygons: bool,
    },
    /// Remove interior knots at the same degree.
    RemoveKnots {
        /// Input curve document (JSON).
        input: PathBuf,
        /// Interior knots to drop, comma-separated decimals.
        #[arg(long, value_delimiter = ',')]
        drop_knots: Vec<f64>,
        /// Output curve document.
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG overlay of input (solid) and result (dashed).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw control polygons in the SVG.
        #[arg(long, requires = "svg")]
        svg_polygons: bool,
    },
    /// Build the dual B-spline basis and report the duality residual.
    Check {
        /// Curve document whose knot vector is checked.
        input: Option<PathBuf>,
        /// Generate a knot vector instead: degree N, M interior knots, SEED.
        #[arg(long, num_args = 3, value_names = ["N", "M", "SEED"])]
        random: Option<Vec<u64>>,
    },
    /// Convert a curve with simple knots to the truncated power basis.
    ConvertPower {
        /// Input curve document (JSON).
        input: PathBuf,
        /// Output coefficient file.
        #[arg(long)]
        out: PathBuf,
        /// Check the conversion on the evaluation grid and print the error.
        #[arg(long)]
        verify: bool,
    },
    /// Run the bundled "Pear" experiments and write results + SVG plots.
    PearDemo {
        /// Output directory (created if missing).
        #[arg(long)]
        outdir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Reduce {
            input,
            degree,
            keep_knots,
            drop_knots,
            out,
            svg,
            svg_polygons,
        } => commands::cmd_reduce(
            &input,
            degree,
            keep_knots.as_deref(),
            drop_knots.as_deref(),
            &out,
            svg.as_deref(),
            svg_polygons,
        ),
        Command::RemoveKnots {
            input,
            drop_knots,
            out,
            svg,
            svg_polygons,
        } => commands::cmd_remove_knots(&input, &drop_knots, &out, svg.as_deref(), svg_polygons),
        Command::Check { input, random } => {
            commands::cmd_check(input.as_deref(), random.as_deref())
        }
        Command::ConvertPower { input, out, verify } => {
            commands::cmd_convert_power(&input, &out, verify)
        }
        Command::PearDemo { outdir } => commands::cmd_pear_demo(&outdir),
    };
    ExitCode::from(code)
}
