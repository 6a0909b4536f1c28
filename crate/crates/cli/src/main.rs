//! `zetakit`: zeta functions of zero sequences from the command line.

mod args;
mod commands;
mod format;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use args::{ModelArgs, QuadArgs};
use commands::{AaaArgs, Failure, Report};

#[derive(Debug, Parser)]
#[command(name = "zetakit", version, about = "Zeta functions of sequences from Taylor and asymptotic data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct Output {
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
    /// Re-derive each result by an independent route and report the difference
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ζ(n) at integers, with the method used and known closed forms
    Values {
        #[command(flatten)]
        model: ModelArgs,
        /// Integers: 3, 1..5, -9..-1, or comma lists
        #[arg(long, default_value = "1..5", allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Poles with orders and residues, ζ(0) and ζ'(0)
    Poles {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// The same report for the sequence A·a_n + B
    Shift {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "A", default_value = "1", allow_hyphen_values = true)]
        a_scale: String,
        #[arg(long = "B", default_value = "0", allow_hyphen_values = true)]
        b_shift: String,
        /// Integers at which to list values
        #[arg(long, default_value = "-3..0", allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Σ a_n^{-s} with an Euler–Maclaurin tail (Re s > α + 1/4)
    Series {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Number of explicit terms (default 10000)
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Ray-plus-circle contour integral (Re s > α)
    Contour {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Continued representation, valid left of α
    Continue {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Rational (AAA) fit of series samples and what it predicts off the interval
    Aaa {
        #[command(flatten)]
        model: ModelArgs,
        /// Sample interval
        #[arg(long, default_value = "2..8", allow_hyphen_values = true)]
        interval: String,
        /// Interval scanned for real zeros and poles
        #[arg(long, default_value = "-3..0", allow_hyphen_values = true)]
        scan: String,
        /// Number of equispaced samples
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// Explicit series terms per sample (default 10000)
        #[arg(long)]
        n: Option<usize>,
        /// Relative fit tolerance (default 1e-13)
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// Models in the catalog with their parameters and caveats
    Catalog {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        out: Output,
    },
}

fn run(cmd: &Command) -> Result<(Report, bool), Failure> {
    Ok(match cmd {
        Command::Values { model, n, quad, out } => (commands::values(model, n, quad, out.check)?, out.json),
        Command::Poles { model, quad, out } => (commands::poles(model, quad, out.check)?, out.json),
        Command::Shift { model, a_scale, b_shift, n, quad, out } => {
            (commands::shift(model, a_scale, b_shift, n, quad, out.check)?, out.json)
        }
        Command::Series { model, s, n, quad, out } => (commands::series(model, s, *n, quad, out.check)?, out.json),
        Command::Contour { model, s, quad, out } => (commands::contour(model, s, quad, out.check)?, out.json),
        Command::Continue { model, s, quad, out } => (commands::continued(model, s, quad, out.check)?, out.json),
        Command::Aaa { model, interval, scan, points, n, tol, out } => {
            let args = AaaArgs { interval, scan, points: *points, n_terms: *n, tol: *tol };
            (commands::aaa(model, args, out.check)?, out.json)
        }
        Command::Catalog { model, out } => (commands::catalog(model, out.check)?, out.json),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((report, json)) => {
            let body = if json {
                serde_json::to_string_pretty(&report.json).expect("report serializes")
            } else {
                report.text
            };
            // a closed pipe (`| head`) is not an error worth a panic
            let _ = writeln!(std::io::stdout(), "{body}");
            if report.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in &report.failures {
                    eprintln!("failed: {f}");
                }
                ExitCode::FAILURE
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
