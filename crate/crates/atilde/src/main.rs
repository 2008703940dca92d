// SPDX-License-Identifier: MIT OR Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use atilde::json::{self, Category, ClassFilter, Model};
use atilde::svg::{self, Surface};
use atilde::verify::{self, VerifyConfig};
use atilde::{parse_range, parse_root, CliError};
use atilde_core::Root;
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Roots, curves and Ext for the affine quiver of type Ã(n−1,1).
#[derive(Parser)]
#[command(name = "atilde", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List positive real roots up to a plateau level.
    Roots {
        /// Rank, at least 3.
        #[arg(long)]
        n: usize,
        /// Largest plateau level.
        #[arg(long, default_value_t = 0)]
        max_m: usize,
        /// Keep only one class.
        #[arg(long, value_enum, default_value_t = ClassFilter::All)]
        class: ClassFilter,
    },
    /// Show the canonical plane curve of a root.
    Curve {
        /// Root as comma-separated integers.
        #[arg(long, value_parser = parse_root)]
        root: Root,
    },
    /// Intersection numbers of two canonical curves.
    Intersect {
        #[arg(long, value_parser = parse_root)]
        a: Root,
        #[arg(long, value_parser = parse_root)]
        b: Root,
        #[arg(long, value_enum, default_value_t = Model::All)]
        model: Model,
    },
    /// Dimension of Ext¹ between two string modules.
    Ext {
        #[arg(long, value_parser = parse_root)]
        a: Root,
        #[arg(long, value_parser = parse_root)]
        b: Root,
        #[arg(long, value_enum, default_value_t = Category::Cluster)]
        category: Category,
    },
    /// Check every covered pair in four independent ways.
    Verify {
        /// Ranks, as N, A..B or A..=B.
        #[arg(long, default_value = "3..5", value_parser = parse_range)]
        n: std::ops::RangeInclusive<usize>,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_lambda: usize,
        /// Corrupt one formula value to test the harness.
        #[arg(long)]
        inject_fault: bool,
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Draw one or two curves as SVG.
    Render {
        #[arg(long, value_parser = parse_root)]
        root: Root,
        /// Optional second curve.
        #[arg(long, value_parser = parse_root)]
        b: Option<Root>,
        #[arg(long, value_enum, default_value_t = Surface::Plane)]
        surface: Surface,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
}

fn print_json<T: Serialize>(v: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Roots { n, max_m, class } => print_json(&json::roots(n, max_m, class)?)?,
        Command::Curve { root } => print_json(&json::curve(&root)?)?,
        Command::Intersect { a, b, model } => print_json(&json::intersect(&a, &b, model)?)?,
        Command::Ext { a, b, category } => print_json(&json::ext(&a, &b, category)?)?,
        Command::Verify { n, max_m, max_lambda, inject_fault, json } => {
            let cfg = VerifyConfig { ranks: n, max_m, max_lambda, inject_fault };
            let report = verify::run(&cfg)?;
            if json {
                print_json(&report)?;
            } else {
                print!("{}", verify::render_text(&report));
            }
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { root, b, surface, out } => {
            let text = svg::render(&root, b.as_ref(), surface)?;
            std::fs::write(&out, text).map_err(|source| CliError::Io { path: out, source })?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
