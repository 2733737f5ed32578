//! Command-line front end for the pattern library.
//!
//! Every verb is a thin adapter over the library API: parse flags, call one
//! library function, print the result. Data goes to stdout, diagnostics to
//! stderr. Exit statuses: 0 success, 2 usage error, 3 domain error (blocked
//! knitting, malformed input), 4 internal consistency violation.

use std::env::{self, VarError};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use yfrieze_core::enumerate::{default_bound, enumerate_arithmetic_yfriezes, SearchConfig};
use yfrieze_core::ensemble::{p_map, surjectivity_report};
use yfrieze_core::frieze::{enumerate_friezes, verify_frieze};
use yfrieze_core::json::{deserialize_grid, serialize_grid};
use yfrieze_core::render::{ascii_grid, ascii_strip};
use yfrieze_core::yfrieze::{
    check_glide_symmetry, verify_yfrieze, y_knit_horizontal, y_knit_vertical, VerticalKnit,
};
use yfrieze_core::{Direction, Error, PatternGrid, PatternKind, Rational, Result, ZigZag};

/// Name of the environment variable that overrides the default entry bound
/// for `enumerate-yfriezes` and `surjectivity` when `--bound` is absent.
const BOUND_VAR: &str = "YFRIEZE_BOUND";

#[derive(Parser)]
#[command(name = "yfrieze", version, about = "Knit, verify, render, and enumerate frieze and Y-frieze patterns", long_about = None)]
#[command(after_help = "Default entry bounds for the searches can be overridden with YFRIEZE_BOUND.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridOut {
    Ascii,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchOut {
    Json,
    Diagonals,
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FriezeOut {
    Json,
    Count,
}

#[derive(Subcommand)]
enum Command {
    /// Knit downward from a periodic first row until the pattern closes
    KnitVertical {
        /// First-row entries for one period, comma separated (e.g. 1,2,5)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        first_row: Vec<Rational>,
        /// Period of the first row; must equal the number of entries given
        #[arg(long)]
        period: usize,
        /// Give up and print the open strip after this many knitted rows
        #[arg(long, default_value_t = 64)]
        max_rows: usize,
        #[arg(long, value_enum, default_value_t = GridOut::Ascii)]
        out: GridOut,
    },
    /// Knit a closed pattern of width n from a zig-zag of n values
    KnitHorizontal {
        /// Width of the resulting pattern; must equal the number of values
        #[arg(long)]
        width: usize,
        /// Zig-zag entries from the first row down, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<Rational>,
        /// Steps between consecutive zig-zag entries: SW or SE, comma separated
        #[arg(long, value_delimiter = ',')]
        dirs: Vec<Direction>,
        /// Column of the first zig-zag entry
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        anchor: i64,
        #[arg(long, value_enum, default_value_t = GridOut::Ascii)]
        out: GridOut,
    },
    /// Check every boundary row and diamond of a stored pattern
    Verify {
        /// Pattern file in the JSON grid format
        file: PathBuf,
    },
    /// Test a stored pattern for glide symmetry
    GlideCheck {
        /// Pattern file in the JSON grid format
        file: PathBuf,
    },
    /// Print the staggered ASCII layout of a stored pattern
    Render {
        /// Pattern file in the JSON grid format
        file: PathBuf,
    },
    /// List all friezes of a given width via polygon triangulations
    EnumerateFriezes {
        #[arg(long)]
        width: usize,
        #[arg(long, value_enum, default_value_t = FriezeOut::Count)]
        out: FriezeOut,
    },
    /// Search for all arithmetic Y-friezes with entries up to a bound
    EnumerateYfriezes {
        #[arg(long)]
        width: usize,
        /// Largest entry admitted by the search (default per width, or YFRIEZE_BOUND)
        #[arg(long)]
        bound: Option<u64>,
        /// Worker threads for the search partition
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = SearchOut::Diagonals)]
        out: SearchOut,
    },
    /// Map friezes of a given width to their Y-frieze images
    Pmap {
        #[arg(long)]
        width: usize,
        /// Image of one frieze, indexed in enumeration order from 0
        #[arg(long, conflicts_with = "all")]
        frieze_index: Option<usize>,
        /// Images of every frieze of this width (the default)
        #[arg(long)]
        all: bool,
    },
    /// Compare the frieze image against the bounded search and write a report
    Surjectivity {
        #[arg(long)]
        width: usize,
        /// Largest entry admitted by the search (default per width, or YFRIEZE_BOUND)
        #[arg(long)]
        bound: Option<u64>,
        /// Report file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::TheoremViolation(_) => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::KnitVertical { first_row, period, max_rows, out } => {
            if first_row.len() != period {
                return Err(Error::domain(format!(
                    "--period is {period} but --first-row has {} entries",
                    first_row.len()
                )));
            }
            match y_knit_vertical(&first_row, max_rows)? {
                VerticalKnit::Closed(f) => print_grid(f.grid(), PatternKind::YFrieze, out),
                VerticalKnit::Open(strip) => match out {
                    GridOut::Ascii => println!("{}", ascii_strip(&strip)),
                    GridOut::Json => {
                        let rows: Vec<Vec<String>> = strip
                            .rows()
                            .iter()
                            .map(|row| row.iter().map(Rational::to_string).collect())
                            .collect();
                        let doc = json!({
                            "kind": "strip",
                            "period": strip.period(),
                            "rows": rows,
                        });
                        println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
                    }
                },
            }
            Ok(())
        }
        Command::KnitHorizontal { width, values, dirs, anchor, out } => {
            if values.len() != width {
                return Err(Error::domain(format!(
                    "--width is {width} but --values has {} entries",
                    values.len()
                )));
            }
            let zigzag = ZigZag::new(values, dirs, anchor)?;
            let pattern = y_knit_horizontal(&zigzag)?;
            print_grid(pattern.grid(), PatternKind::YFrieze, out);
            Ok(())
        }
        Command::Verify { file } => {
            let (grid, kind) = load_grid(&file)?;
            let report = match kind {
                PatternKind::YFrieze => verify_yfrieze(&grid),
                PatternKind::Frieze => verify_frieze(&grid),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("valid json"));
            Ok(())
        }
        Command::GlideCheck { file } => {
            let (grid, kind) = load_grid(&file)?;
            let doc = json!({
                "kind": kind,
                "width": grid.width(),
                "glide_symmetric": check_glide_symmetry(&grid),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
            Ok(())
        }
        Command::Render { file } => {
            let (grid, _) = load_grid(&file)?;
            println!("{}", ascii_grid(&grid));
            Ok(())
        }
        Command::EnumerateFriezes { width, out } => {
            let friezes = enumerate_friezes(width)?;
            match out {
                FriezeOut::Count => {
                    let doc = json!({ "width": width, "count": friezes.len() });
                    println!("{doc}");
                }
                FriezeOut::Json => {
                    let patterns: Vec<serde_json::Value> = friezes
                        .iter()
                        .map(|f| grid_value(f.grid(), PatternKind::Frieze))
                        .collect();
                    let doc = json!({
                        "width": width,
                        "count": friezes.len(),
                        "patterns": patterns,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
                }
            }
            Ok(())
        }
        Command::EnumerateYfriezes { width, bound, jobs, out } => {
            if jobs == Some(0) {
                return Err(Error::domain("--jobs must be at least 1"));
            }
            let bound = resolve_bound(bound, width)?;
            let cfg = SearchConfig::new(width, bound)?.parallelism(jobs);
            let found = enumerate_arithmetic_yfriezes(&cfg)?;
            match out {
                SearchOut::Diagonals => {
                    for pattern in &found {
                        println!("{}", diagonal_line(pattern.diagonal()));
                    }
                    eprintln!("{}", json!({ "complete_up_to_bound": bound }));
                }
                SearchOut::Count => {
                    let doc = json!({
                        "width": width,
                        "complete_up_to_bound": bound,
                        "count": found.len(),
                    });
                    println!("{doc}");
                }
                SearchOut::Json => {
                    let patterns: Vec<serde_json::Value> = found
                        .iter()
                        .map(|f| grid_value(f.grid(), PatternKind::YFrieze))
                        .collect();
                    let doc = json!({
                        "width": width,
                        "complete_up_to_bound": bound,
                        "count": found.len(),
                        "patterns": patterns,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
                }
            }
            Ok(())
        }
        Command::Pmap { width, frieze_index, all: _ } => {
            let friezes = enumerate_friezes(width)?;
            match frieze_index {
                Some(k) => {
                    let frieze = friezes.get(k).ok_or_else(|| {
                        Error::domain(format!(
                            "--frieze-index {k} is out of range: width {width} has {} friezes",
                            friezes.len()
                        ))
                    })?;
                    let image = p_map(frieze)?;
                    println!("{}", serialize_grid(image.grid(), PatternKind::YFrieze));
                }
                None => {
                    let images = friezes
                        .iter()
                        .map(|f| Ok(grid_value(p_map(f)?.grid(), PatternKind::YFrieze)))
                        .collect::<Result<Vec<_>>>()?;
                    let doc = json!({
                        "width": width,
                        "count": images.len(),
                        "images": images,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
                }
            }
            Ok(())
        }
        Command::Surjectivity { width, bound, out } => {
            let bound = resolve_bound(bound, width)?;
            let report = surjectivity_report(width, bound)?;
            let text = serde_json::to_string_pretty(&report).expect("valid json");
            match out {
                Some(path) => {
                    fs::write(&path, text + "\n").map_err(|e| {
                        Error::domain(format!("cannot write {}: {e}", path.display()))
                    })?;
                    eprintln!(
                        "wrote {} (conjecture consistent: {})",
                        path.display(),
                        report.conjecture_consistent()
                    );
                }
                None => println!("{text}"),
            }
            Ok(())
        }
    }
}

fn load_grid(path: &PathBuf) -> Result<(PatternGrid, PatternKind)> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    deserialize_grid(&text)
}

fn resolve_bound(flag: Option<u64>, width: usize) -> Result<u64> {
    if let Some(bound) = flag {
        return Ok(bound);
    }
    match env::var(BOUND_VAR) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::parse(BOUND_VAR, format!("not a positive integer: {text:?}"))),
        Err(VarError::NotPresent) => Ok(default_bound(width)),
        Err(VarError::NotUnicode(_)) => Err(Error::parse(BOUND_VAR, "not valid unicode")),
    }
}

fn print_grid(grid: &PatternGrid, kind: PatternKind, out: GridOut) {
    match out {
        GridOut::Ascii => println!("{}", ascii_grid(grid)),
        GridOut::Json => println!("{}", serialize_grid(grid, kind)),
    }
}

// Re-parsing the serializer's output is cheap at CLI scale and keeps the
// embedded documents bit-identical to the standalone grid format.
fn grid_value(grid: &PatternGrid, kind: PatternKind) -> serde_json::Value {
    serde_json::from_str(&serialize_grid(grid, kind)).expect("serializer output is valid JSON")
}

fn diagonal_line(diagonal: Vec<Rational>) -> String {
    let parts: Vec<String> = diagonal.iter().map(Rational::to_string).collect();
    parts.join(",")
}
