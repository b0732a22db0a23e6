//! Command-line driver: verification sweeps, chart inspection and artifact export.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use grdual_core::{GrassmannShape, IndexSubset, Partition};

pub mod commands;
pub mod verify;

pub use verify::{run_verify, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "grdual", version, about = "Newton-Okounkov and superpotential polytopes of plabic graphs for Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare both polytopes for every graph in the move class of the rectangles graph.
    Verify(VerifyArgs),
    /// Write a graph, orientation, polytope or superpotential.
    Export(ExportArgs),
    /// Print Plücker polynomials in the network chart of a graph.
    Chart(ChartArgs),
    /// List the move class found by breadth-first search, with its square-move edges.
    Moves(MovesArgs),
    /// Print the superpotential in a cluster chart, or its tropicalization.
    Superpotential(SuperpotentialArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ShapeArgs {
    /// Dimension of the dual Grassmannian; the charts live on Gr(n-k, n).
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

impl ShapeArgs {
    pub fn shape(&self) -> Result<GrassmannShape> {
        Ok(GrassmannShape::new(self.k, self.n)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Dilation factors, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub r: Vec<usize>,
    /// Maximum number of graphs visited by the move-class search.
    #[arg(long, default_value_t = 10_000)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Graph,
    Orientation,
    Polytope,
    Superpotential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// Newton-Okounkov polytope of the network chart.
    A,
    /// Tropicalized superpotential.
    B,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Square moves from the rectangles graph, as face labels separated by `/`.
    #[arg(long, default_value = "")]
    pub path: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = Model::A)]
    pub model: Model,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value = "")]
    pub path: String,
    /// An (n-k)-subset such as `2,4`; all subsets when omitted.
    #[arg(long = "J", alias = "j")]
    pub j: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MovesArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value_t = 10_000)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WForm {
    /// Sum over frozen indices of ratios of Plücker coordinates.
    Plucker,
    /// One term per arrow of the grid quiver in the rectangles cluster.
    Rectangles,
    /// The rectangles form mutated along `--path`.
    Cluster,
}

#[derive(Debug, Args)]
pub struct SuperpotentialArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value = "")]
    pub path: String,
    #[arg(long, value_enum, default_value_t = WForm::Cluster)]
    pub form: WForm,
    /// Print the inequalities of the r-th tropical polytope instead of the expression.
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `1,1/2/2,2` into face labels. The empty string and `-` give the empty path.
pub fn parse_path(text: &str) -> Result<Vec<Partition>> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    text.split('/')
        .map(|s| Partition::parse(s).with_context(|| format!("bad face label {s:?} in path {text:?}")))
        .collect()
}

pub fn parse_subset(text: &str, shape: GrassmannShape) -> Result<IndexSubset> {
    let j = IndexSubset::parse(text)?;
    let want = shape.rows();
    if j.len() != want || j.elements().iter().any(|&i| i == 0 || i > shape.n) {
        bail!("{text:?} is not a {want}-subset of 1..={}", shape.n);
    }
    Ok(j)
}

/// Writes `text` to `out`, or to standard output.
pub fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a command, returning whether it succeeded. Verification failures give `Ok(false)`.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(args) => {
            let report = run_verify(args.shape.shape()?, &args.r, args.budget)?;
            let text = match args.format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => report.to_text(),
                Format::Dot => bail!("verification reports have no DOT form"),
            };
            emit(&text, args.out.as_ref())?;
            Ok(report.passed)
        }
        Command::Export(args) => {
            let text = commands::export(&args)?;
            emit(&text, args.out.as_ref())?;
            Ok(true)
        }
        Command::Chart(args) => {
            emit(&commands::chart(&args)?, args.out.as_ref())?;
            Ok(true)
        }
        Command::Moves(args) => {
            emit(&commands::moves(&args)?, args.out.as_ref())?;
            Ok(true)
        }
        Command::Superpotential(args) => {
            emit(&commands::superpotential(&args)?, args.out.as_ref())?;
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths() {
        assert!(parse_path("").unwrap().is_empty());
        assert!(parse_path("-").unwrap().is_empty());
        let p = parse_path("1,1/2/2,2").unwrap();
        assert_eq!(p, vec![Partition::new(vec![1, 1]), Partition::new(vec![2]), Partition::new(vec![2, 2])]);
        assert!(parse_path("1,2").is_err());
    }

    #[test]
    fn subsets() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        assert_eq!(parse_subset("2,4", sh).unwrap(), IndexSubset::new(vec![2, 4]));
        assert!(parse_subset("1,2,3", sh).is_err());
        assert!(parse_subset("1,6", sh).is_err());
    }
}
