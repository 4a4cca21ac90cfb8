//! `chebgreen`: export Green matrices, solve `y'' = f` with `y(+-1) = 0`,
//! run the identity checks and time the solvers.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on invalid
//! usage or input.

mod bench;
mod checks;
mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Result};
use chebgreen::{green_matrix, solve_bvp, ChebGrid, NodeVector, SolveMethod};
use clap::{Parser, Subcommand, ValueEnum};

use checks::CheckKind;

#[derive(Parser)]
#[command(name = "chebgreen", version, about = "Chebyshev Green matrix toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write the (n+1) x (n+1) Green matrix.
    Green {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
        /// Order nodes from -1 to 1 instead of 1 to -1.
        #[arg(long)]
        ascending: bool,
    },
    /// Solve y'' = f, y(-1) = y(1) = 0 and write the node values of y.
    Solve {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        /// one, x, exp, sin, or file:<path> with n+1 values in grid order.
        #[arg(long)]
        rhs: String,
        #[arg(long, default_value = "dense-green")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the deviation of each check from its exact value as JSON.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        check: CheckKind,
    },
    /// Median wall-clock times of matrix build, dense apply, matrix-free apply
    /// and the stripped linear solve.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        repeat: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn rhs_values(rhs: &str, grid: &ChebGrid) -> Result<NodeVector> {
    let named: Option<fn(f64) -> f64> = match rhs {
        "one" => Some(|_| 1.0),
        "x" => Some(|x| x),
        "exp" => Some(f64::exp),
        "sin" => Some(f64::sin),
        _ => None,
    };
    if let Some(f) = named {
        return Ok(NodeVector::from_fn(grid, f));
    }
    let Some(path) = rhs.strip_prefix("file:") else {
        bail!("unknown rhs {rhs:?}; expected one, x, exp, sin or file:<path>");
    };
    let values = format::read_column(Path::new(path))?;
    if values.len() != grid.len() {
        bail!(
            "{path} holds {} values, expected {} for n = {}",
            values.len(),
            grid.len(),
            grid.degree()
        );
    }
    Ok(NodeVector::new(grid.degree(), values)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Green {
            n,
            out,
            format,
            ascending,
        } => {
            let g = green_matrix(n as usize)?;
            let rows = format::ordered_rows(&g, ascending);
            let text = match format {
                MatrixFormat::Csv => format::matrix_csv(&rows),
                MatrixFormat::Json => format::matrix_json(g.degree(), ascending, &rows)?,
            };
            format::emit(out.as_deref(), &text)?;
        }
        Command::Solve {
            n,
            rhs,
            method,
            out,
        } => {
            let method: SolveMethod = method.parse()?;
            let grid = ChebGrid::new(n as usize)?;
            let f = rhs_values(&rhs, &grid)?;
            let y = solve_bvp(&f, method)?;
            format::emit(out.as_deref(), &format::column_csv(y.values()))?;
        }
        Command::Verify { n, check } => {
            let reports = checks::run(check, n as usize)?;
            println!("{}", serde_json::to_string_pretty(&reports)?);
            if reports.iter().any(|r| !r.passed) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            n_list,
            repeat,
            out,
        } => {
            if let Some(bad) = n_list.iter().find(|&&n| n < 3) {
                bail!("bench sizes must be at least 3, got {bad}");
            }
            let rows = n_list
                .iter()
                .map(|&n| bench::run(n, repeat as usize))
                .collect::<Result<Vec<_>>>()?;
            format::emit(
                out.as_deref(),
                &(serde_json::to_string_pretty(&rows)? + "\n"),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
