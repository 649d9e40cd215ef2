use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Kirchhoff index, spectra and extremal checks for small graphs.
#[derive(Debug, Parser)]
#[command(name = "kirchhoff", version)]
struct Cli {
    /// Worker threads for exhaustive runs (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of one graph
    Compute(ComputeArgs),
    /// Check a theorem exhaustively or by sampling, and write a report
    Verify(VerifyArgs),
    /// Rank the graphs of an enumeration space by Kf
    Search(SearchArgs),
    /// Closed forms against numeric values over a range of orders
    Table(TableArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Graph in graph6 text
    #[arg(long, group = "source")]
    graph6: Option<String>,
    /// File with an `n m` header and one `u v` edge per line
    #[arg(long, group = "source")]
    edgelist: Option<PathBuf>,
    /// Family spec such as `dumbbell:3,3,5`
    #[arg(long, group = "source")]
    family: Option<String>,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    kf: bool,
    #[arg(long)]
    wiener: bool,
    #[arg(long)]
    spectrum: bool,
    /// Spanning-tree count
    #[arg(long)]
    trees: bool,
    #[arg(long)]
    resistance: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = kirchhoff::verify::theorem::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = kirchhoff::verify::DEFAULT_BUDGET)]
    budget: u64,
    /// Also write the report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "space", required = true, multiple = false)]
struct Space {
    /// `n,p`: Kₙ minus every p-subset of its edges
    #[arg(long, value_name = "N,P", value_parser = commands::parse_pair)]
    deleted_edges: Option<(usize, usize)>,
    /// All labeled trees on n vertices
    #[arg(long, value_name = "N")]
    trees: Option<usize>,
    /// `n,m`: connected graphs with n vertices and m edges
    #[arg(long, value_name = "N,M", value_parser = commands::parse_pair)]
    connected: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[command(flatten)]
    space: Space,
    #[arg(long, conflicts_with = "max")]
    min: bool,
    #[arg(long)]
    max: bool,
    #[arg(long, default_value_t = 1)]
    top: usize,
    #[arg(long, default_value_t = kirchhoff::verify::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Family template, repeatable; `n` stands for the order, as in `starlike:n,(n-4,2,1)`
    #[arg(long = "family", required = true)]
    families: Vec<String>,
    /// Order or inclusive range, `28` or `5..7`
    #[arg(long, value_parser = commands::parse_range)]
    n: (usize, usize),
    #[arg(long, default_value = "\t")]
    delimiter: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Compute(args) => commands::compute(args),
        Command::Verify(args) => commands::verify(args),
        Command::Search(args) => commands::search(args),
        Command::Table(args) => commands::table(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
