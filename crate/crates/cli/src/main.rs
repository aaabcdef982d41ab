//! Scenario-driven command line front end.
//!
//! ```text
//! icstate compute --preset fig4 --out out/fig4
//! icstate compute --config scenario.json --grid 21 --format csv,json,gnuplot
//! icstate dm --scheme scheme.txt --out out/dm
//! icstate presets
//! ```
//!
//! Exit codes: 0 success, 2 configuration error, 3 every requested region
//! came out infeasible.

use clap::{Args, Parser, Subcommand};
use icstate::scenario::{
    preset, run_dm_scheme, run_scenario, write_report, LogBase, OutputFormat, RegionReport,
    ScenarioConfig, ScenarioError, PRESET_NAMES,
};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CONFIG: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "icstate",
    version,
    about = "Rate regions for the state-dependent two-user Gaussian interference channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the regions of a scenario and write boundary data.
    Compute(ComputeArgs),
    /// Compute the projected region of a discrete scheme file.
    Dm(DmArgs),
    /// List the built-in figure presets.
    Presets,
}

#[derive(Args)]
struct ComputeArgs {
    /// Built-in preset name (fig4..fig8).
    #[arg(long, conflicts_with = "config")]
    preset: Option<String>,
    /// JSON scenario config path.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the points per swept parameter axis.
    #[arg(long)]
    grid: Option<usize>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Comma-separated outputs: csv,json,gnuplot.
    #[arg(long)]
    format: Option<String>,
    /// Inclusion-matrix tolerance in bits.
    #[arg(long)]
    tol: Option<f64>,
    /// Rate unit of emitted values: 2 (bits) or e (nats).
    #[arg(long)]
    log_base: Option<String>,
}

#[derive(Args)]
struct DmArgs {
    /// Scheme description file.
    #[arg(long)]
    scheme: PathBuf,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Comma-separated outputs: csv,json,gnuplot.
    #[arg(long, default_value = "csv,json")]
    format: String,
}

fn parse_formats(s: &str) -> Result<Vec<OutputFormat>, ScenarioError> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse())
        .collect()
}

fn load_config(args: &ComputeArgs) -> Result<ScenarioConfig, ScenarioError> {
    let mut cfg = match (&args.preset, &args.config) {
        (Some(name), None) => preset(name).ok_or_else(|| {
            ScenarioError::Config(format!(
                "unknown preset '{name}' (available: {})",
                PRESET_NAMES.join(", ")
            ))
        })?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ScenarioError::Config(format!("config {}: {e}", path.display())))?;
            ScenarioConfig::from_json(&text)?
        }
        _ => {
            return Err(ScenarioError::Config(
                "exactly one of --preset or --config is required".into(),
            ))
        }
    };
    if let Some(n) = args.grid {
        cfg.grid_points = n;
    }
    if let Some(t) = args.tol {
        cfg.tol = t;
    }
    if let Some(f) = &args.format {
        cfg.formats = parse_formats(f)?;
    }
    if let Some(b) = &args.log_base {
        cfg.log_base = b.parse::<LogBase>()?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn all_empty(report: &RegionReport) -> bool {
    report.regions.iter().all(|e| e.vertices.is_empty())
}

fn print_summary(report: &RegionReport) {
    if let Some(case) = report.provenance.case {
        println!("case: {case}");
    }
    for entry in &report.regions {
        match &entry.note {
            Some(note) => println!("  {:>16}: empty ({note})", entry.name),
            None => println!(
                "  {:>16}: {} vertices, area {:.6}",
                entry.name,
                entry.vertices.len(),
                entry.area
            ),
        }
    }
}

fn compute(args: &ComputeArgs) -> Result<u8, ScenarioError> {
    let cfg = load_config(args)?;
    let report = run_scenario(&cfg)?;
    let files = write_report(&report, &args.out, &cfg.formats)?;
    print_summary(&report);
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(if all_empty(&report) {
        EXIT_INFEASIBLE
    } else {
        0
    })
}

fn dm(args: &DmArgs) -> Result<u8, ScenarioError> {
    let text = std::fs::read_to_string(&args.scheme)
        .map_err(|e| ScenarioError::Config(format!("scheme {}: {e}", args.scheme.display())))?;
    let scheme =
        icstate::dm::parse_scheme(&text).map_err(|e| ScenarioError::Config(e.to_string()))?;
    let report = run_dm_scheme(&scheme, 1e-6)?;
    let formats = parse_formats(&args.format)?;
    let files = write_report(&report, &args.out, &formats)?;
    print_summary(&report);
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(if all_empty(&report) {
        EXIT_INFEASIBLE
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Dm(args) => dm(args),
        Command::Presets => {
            for name in PRESET_NAMES {
                println!("{name}");
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(ScenarioError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
