//! Command-line front end: argument parsing, file formats, trace tables
//! and SVG output for the `partitionlab` binary.

pub mod commands;
mod error;
pub mod io;
pub mod svg;
pub mod trace;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "partitionlab", version, about = "k-means and spectral graph partitioning")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lloyd's k-means over a points CSV
    Kmeans(KmeansArgs),
    /// Fiedler bisection / recursive spectral partitioning of an edge list
    Spectral(SpectralArgs),
    /// Print adjacency, degree and Laplacian matrices of an edge list
    Laplacian(LaplacianArgs),
    /// Write the edge list of an m-dimensional grid graph
    Lattice(LatticeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ties {
    Highest,
    Lowest,
}

#[derive(Debug, Args)]
pub struct KmeansArgs {
    /// Points CSV with header `id,<col1>,<col2>,...`
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Initial centers as `x1,y1;x2,y2;...`
    #[arg(long, conflicts_with = "centers_file")]
    pub centers: Option<String>,
    /// File with one comma-separated initial center per line
    #[arg(long)]
    pub centers_file: Option<PathBuf>,
    /// Seed for sampling initial centers from the data (required without centers)
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    pub max_iterations: usize,
    /// Which center wins an exact distance tie
    #[arg(long, value_enum, default_value_t = Ties::Highest)]
    pub ties: Ties,
    /// Labels CSV output (`id,label`); printed to stdout when omitted
    #[arg(long)]
    pub labels: Option<PathBuf>,
    /// Per-iteration trace TSV output
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Full-precision distances and centers in the trace
    #[arg(long)]
    pub precise: bool,
    /// Scatter plot of the final clustering
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// 1-based coordinate columns to plot, e.g. `1,2`
    #[arg(long)]
    pub dims: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("stop").required(true).args(["parts", "lambda2_stop"])))]
pub struct SpectralArgs {
    /// Edge list (`u v` per line, optional `n <count>` header)
    #[arg(long)]
    pub edges: PathBuf,
    /// Number of parts to produce
    #[arg(long)]
    pub parts: Option<usize>,
    /// Stop refining a part once its algebraic connectivity exceeds this
    #[arg(long, allow_hyphen_values = true)]
    pub lambda2_stop: Option<f64>,
    /// Threshold on Fiedler-vector entries
    #[arg(long, allow_hyphen_values = true, conflicts_with = "median", default_value_t = 0.0)]
    pub alpha: f64,
    /// Split at the median Fiedler entry instead of a fixed threshold
    #[arg(long)]
    pub median: bool,
    /// Connected parts smaller than twice this are not bisected
    #[arg(long, default_value_t = 1)]
    pub min_part_size: usize,
    /// Accept disconnected input and split it by components first
    #[arg(long)]
    pub components_first: bool,
    /// Parts CSV output (`vertex,part`)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report output; printed to stdout when omitted
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Circular-layout plot of the partitioned graph
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LaplacianArgs {
    #[arg(long)]
    pub edges: PathBuf,
    /// Also print the N smallest Laplacian eigenvalues
    #[arg(long)]
    pub eigs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Side lengths, e.g. `3,3` or `2,2,2`
    #[arg(long)]
    pub dims: String,
    /// Edge-list output; printed to stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Help and version requests are written to `stdout` and return `Ok`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(stdout, "{e}")?;
            return Ok(());
        }
        Err(e) => return Err(CliError::Usage(e.render().to_string())),
    };
    let color = commands::color_from_env();
    match &cli.command {
        Command::Kmeans(a) => commands::run_kmeans(a, stdout, stderr),
        Command::Spectral(a) => commands::run_spectral(a, color, stdout),
        Command::Laplacian(a) => commands::run_laplacian(a, stdout),
        Command::Lattice(a) => commands::run_lattice(a, stdout),
    }
}
