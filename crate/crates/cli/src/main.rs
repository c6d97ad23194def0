//! `curvop` command-line driver.
//!
//! Exit codes: 0 when every gated check passes, 1 when a check fails (the
//! report is still written), 2 on usage or configuration errors.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use crate::args::Common;
use crate::commands::{extremal, identities, minimize, spectrum, table};
use crate::output::Output;

#[derive(Parser, Debug)]
#[command(name = "curvop", version, about = "Numerical checks for curvature operators of the second kind")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the identity suite over random tensors.
    Identities(identities::IdentitiesArgs),
    /// Spectrum and δ-nonnegativity of a model, random or loaded tensor.
    Spectrum(spectrum::SpectrumArgs),
    /// Constrained maxima of the linear-sum patterns against their closed forms.
    Extremal(extremal::ExtremalArgs),
    /// Candidate points against an independent brute-force minimizer.
    Minimize(minimize::MinimizeArgs),
    /// Sign table of the F differences over a dimension range.
    Table(table::TableArgs),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Identities(a) => &a.common,
            Command::Spectrum(a) => &a.common,
            Command::Extremal(a) => &a.common,
            Command::Minimize(a) => &a.common,
            Command::Table(a) => &a.common,
        }
    }

    fn execute(&self) -> Result<Output> {
        match self {
            Command::Identities(a) => identities::run(a),
            Command::Spectrum(a) => spectrum::run(a),
            Command::Extremal(a) => extremal::run(a),
            Command::Minimize(a) => minimize::run(a),
            Command::Table(a) => table::run(a),
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let common = cli.command.common();
    let out = match common.jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build()?.install(|| cli.command.execute())?,
        None => cli.command.execute()?,
    };
    out.write(common.format, common.out.as_deref())?;
    Ok(out.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
