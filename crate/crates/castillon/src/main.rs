use std::path::PathBuf;
use std::process::ExitCode;

use castillon::commands;
use castillon::output::Solver;
use castillon::svg::Figure;
use clap::{Parser, Subcommand};

/// Cramer–Castillon solutions on tritangent circles and inconics.
#[derive(Parser)]
#[command(name = "castillon", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a problem file and write the solution file.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum)]
        solver: Option<Solver>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every claim on a triangle, or on a seeded random sweep.
    Verify {
        input: Option<PathBuf>,
        /// Number of random triangles; the seed comes from CASTILLON_SEED.
        #[arg(long)]
        sweep: Option<usize>,
    },
    /// List the center registry, or check the correspondences on a triangle.
    Centers { input: Option<PathBuf> },
    /// Draw a figure as SVG.
    Render {
        input: PathBuf,
        #[arg(long, value_enum)]
        figure: Figure,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    let code = match cli.cmd {
        Cmd::Solve { input, solver, out: dest } => commands::solve(&input, solver, dest.as_deref(), &mut out, &mut err),
        Cmd::Verify { input, sweep } => commands::verify(input.as_deref(), sweep, &mut out, &mut err),
        Cmd::Centers { input } => commands::centers(input.as_deref(), &mut out, &mut err),
        Cmd::Render { input, figure, out: dest } => commands::render_cmd(&input, figure, &dest, &mut err),
    };
    ExitCode::from(code)
}
