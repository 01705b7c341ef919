//! Command implementations behind the `dedekind` binary.
//!
//! Every command returns its complete output as a `String`, so the binary
//! only decides where it goes and which exit code to use.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dedekind::enumeration::enumerate_halfplane;
use dedekind::formats;
use dedekind::membership::{orbit_bfs, reduce_to_base};
use dedekind::modular::DedekindSymbol;
use dedekind::patterns::{FibSequence, Series};
use dedekind::rational::{int, parse_rational, ratio};
use dedekind::render::{render_svg, Model, RenderConfig, Viewport};
use dedekind::{enumerate_disk, BigRational};

/// Exit status for malformed command lines.
pub const EXIT_USAGE: i32 = 1;
/// Exit status for well-formed requests on invalid mathematical input.
pub const EXIT_MATH: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] dedekind::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Math(dedekind::Error::Parse(_)) => EXIT_USAGE,
            CliError::Math(_) | CliError::Io { .. } => EXIT_MATH,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dedekind", version, about = "Circles of the Dedekind tessellation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    HalfPlane,
    Disk,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List circles k/n (n <= n-max) and vertical lines in a window of the real axis.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
        /// Left end of the half-open window [x-min, x-max).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x_min: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x_max: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Reduce a symbol "k/n,m" to the central circle and print the certificate.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
    },
    /// Breadth-first closure of the central circle under N, T and T^-1.
    Orbit {
        #[arg(long)]
        depth: usize,
        /// Symbols with larger curvature are not expanded.
        #[arg(long, default_value_t = 100)]
        beta_bound: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Draw the tessellation as SVG.
    Render {
        #[arg(long, value_enum, default_value = "half-plane")]
        model: ModelArg,
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
        #[arg(long, allow_hyphen_values = true)]
        x_min: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x_max: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y_min: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y_max: Option<String>,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 1.0)]
        stroke_width: f64,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the points (n, k) with k in K(n), one "n k" pair per line.
    Scatter {
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
    },
    /// List the circles of the disk model with curvature up to n-max.
    DiskEnumerate {
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// First terms of a named series (A, A', B, C+, C-, D+, D-, E+, E-, fib-a .. fib-d) as CSV.
    Series {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

fn rational_arg(name: &str, value: &str) -> Result<BigRational, CliError> {
    parse_rational(value).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built from integers serialize");
    s.push('\n');
    s
}

fn default_viewport(model: ModelArg) -> [BigRational; 4] {
    match model {
        ModelArg::HalfPlane => [int(-2), int(2), int(0), ratio(3, 2)],
        ModelArg::Disk => [ratio(-3, 2), ratio(3, 2), ratio(-3, 2), ratio(3, 2)],
    }
}

/// Runs a parsed command. `Render` with `--output` writes the file and
/// returns an empty string.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Enumerate { n_max, x_min, x_max, format } => {
            let lo = rational_arg("x-min", x_min)?;
            let hi = rational_arg("x-max", x_max)?;
            let items = enumerate_halfplane(*n_max, &lo, &hi)?;
            Ok(match format {
                Format::Csv => formats::enumeration_csv(&items)?,
                Format::Json => json_text(&formats::enumeration_json(&items)),
            })
        }
        Command::Reduce { symbol } => {
            let s: DedekindSymbol = symbol.parse()?;
            Ok(json_text(&reduce_to_base(&s)?.to_json()))
        }
        Command::Orbit { depth, beta_bound, format } => {
            let symbols = orbit_bfs(*depth, *beta_bound);
            Ok(match format {
                Format::Csv => formats::symbols_csv(&symbols)?,
                Format::Json => json_text(&serde_json::Value::Array(symbols.iter().map(DedekindSymbol::to_json).collect())),
            })
        }
        Command::Render { model, n_max, x_min, x_max, y_min, y_max, width, stroke_width, output } => {
            let [dx0, dx1, dy0, dy1] = default_viewport(*model);
            let pick = |name: &str, v: &Option<String>, d: BigRational| match v {
                Some(text) => rational_arg(name, text),
                None => Ok(d),
            };
            let viewport = Viewport {
                x_min: pick("x-min", x_min, dx0)?,
                x_max: pick("x-max", x_max, dx1)?,
                y_min: pick("y-min", y_min, dy0)?,
                y_max: pick("y-max", y_max, dy1)?,
            };
            let config = RenderConfig {
                model: match model {
                    ModelArg::HalfPlane => Model::HalfPlane,
                    ModelArg::Disk => Model::Disk,
                },
                viewport,
                width_px: *width,
                stroke_width: *stroke_width,
                n_max: *n_max,
            };
            let svg = render_svg(&config)?;
            match output {
                Some(path) => {
                    std::fs::write(path, svg).map_err(|source| CliError::Io { path: path.clone(), source })?;
                    Ok(String::new())
                }
                None => Ok(svg),
            }
        }
        Command::Scatter { n_max } => Ok(formats::scatter_text(&formats::scatter_points(*n_max)?)),
        Command::DiskEnumerate { n_max, format } => {
            let symbols = enumerate_disk(*n_max)?;
            Ok(match format {
                Format::Csv => formats::disk_csv(&symbols)?,
                Format::Json => json_text(&formats::disk_json(&symbols)),
            })
        }
        Command::Series { name, count } => {
            if let Ok(series) = name.parse::<Series>() {
                return Ok(formats::series_csv(&series.terms(*count))?);
            }
            match name.parse::<FibSequence>() {
                Ok(fib) => Ok(formats::indexed_symbols_csv(&fib.terms(*count))?),
                Err(_) => Err(CliError::Usage(format!(
                    "unknown series {name:?}; expected A, A', B, C+, C-, D+, D-, E+, E- or fib-a .. fib-d"
                ))),
            }
        }
    }
}
