//! The `bcmd` command line: argument types and one function per
//! subcommand. Each function returns its output as values so it can be
//! driven from code as well as from the binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::graph::{load_edge_list, LoadedGraph};

mod bench;
mod estimate;
mod gen;
mod oracle;
mod shortcut;

pub use bench::{cmd_bench, BenchRow, CSV_HEADER};
pub use estimate::{cmd_estimate, EstimateOutput};
pub use gen::cmd_gen;
pub use oracle::{cmd_oracle, OracleOutput};
pub use shortcut::{cmd_shortcut, Report, ShortcutRun};

/// Exit status for a run whose every repetition hit an infeasible capacity.
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bcmd", version, about = "Add budgeted shortcut edges to shrink graph diameter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate (2-Sweep) or compute (--exact) the diameter
    Estimate(EstimateArgs),
    /// Run one shortcut algorithm and report the diameter reduction
    Shortcut(ShortcutArgs),
    /// Sweep algorithms over k and delta lists and write CSV
    Bench(BenchArgs),
    /// Solve a tiny instance exactly
    Oracle(OracleArgs),
    /// Generate an instance as an edge list
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Restrict to the largest connected component first
    #[arg(long)]
    pub lcc: bool,
}

#[derive(Debug, Args)]
pub struct ShortcutArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// log, const, tree, greedy2sweep, random or path
    #[arg(long)]
    pub algo: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long, default_value_t = 3)]
    pub beta: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    /// Evaluate with the exact diameter instead of 2-Sweep
    #[arg(long)]
    pub exact_eval: bool,
    /// Where to write the winning plan as JSON
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the report; printed to stdout when absent
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64,128,256,512,1024")]
    pub k_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,25,1024")]
    pub delta_list: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, value_delimiter = ',', default_value = "log,const,tree,greedy2sweep,random")]
    pub algos: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub beta: usize,
    #[arg(long)]
    pub exact_eval: bool,
    /// Output file; stdout when absent
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub delta: usize,
    /// diameter, ss:V (eccentricity of vertex V) or colored:FILE
    #[arg(long, default_value = "diameter")]
    pub objective: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Path,
    Cycle,
    Random,
    Tree,
    Gadget,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Gadget sets, e.g. "1,2;2,3" (items numbered from 1)
    #[arg(long)]
    pub sets: Option<String>,
    /// Gadget cover budget
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
    /// Gadget roles file; defaults to the output path with a .roles.json extension
    #[arg(long)]
    pub roles: Option<PathBuf>,
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Estimate(args) => {
            let out = cmd_estimate(&args)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Command::Shortcut(args) => {
            let run = cmd_shortcut(&args)?;
            let text = serde_json::to_string_pretty(&run.report)? + "\n";
            match &args.report {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            if let Some(path) = &args.out {
                fs::write(path, serde_json::to_string_pretty(&run.report.plan)? + "\n")?;
            }
            Ok(if run.infeasible { EXIT_INFEASIBLE } else { 0 })
        }
        Command::Bench(args) => {
            let rows = cmd_bench(&args)?;
            let text = bench::to_csv(&rows);
            match &args.csv {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Oracle(args) => {
            let out = cmd_oracle(&args)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Command::Gen(args) => {
            cmd_gen(&args)?;
            Ok(0)
        }
    }
}

pub(crate) fn read_graph(path: &Path) -> Result<LoadedGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    load_edge_list(&text)
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}
