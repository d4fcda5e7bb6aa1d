//! `coring-lab`: axiom checks and decision procedures for corings, comodules and
//! entwining structures given by structure constants.
//!
//! Every verb prints a JSON report (to `--out` or standard output) and a one-line
//! summary on standard error. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 invalid input or usage.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "coring-lab", version, about = "Exact checks and decision procedures for corings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Where an object comes from: a JSON file or the built-in catalog.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON input file.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Id of a built-in catalog object.
    #[arg(long, value_name = "ID")]
    catalog: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the coring axioms.
    CheckCoring(Source),

    /// Decide coseparability and print the cointegral witnesses.
    Cosep {
        #[command(flatten)]
        source: Source,
        /// Fail unless the verdict equals this value.
        #[arg(long)]
        expect: Option<bool>,
    },

    /// Decide semisimplicity of the comodule category.
    Semisimple {
        #[command(flatten)]
        source: Source,
        /// Fail unless the verdict equals this value.
        #[arg(long)]
        expect: Option<bool>,
    },

    /// Evaluate the coseparability/semisimplicity equivalences on witness sets.
    Theorem {
        #[command(flatten)]
        source: Source,
        /// Minimal polynomial of a field extension, e.g. "x^2 + 1" (repeatable).
        #[arg(long = "ext", value_name = "MINPOLY")]
        extensions: Vec<String>,
        /// JSON file of a semisimple test coring (repeatable).
        #[arg(long = "with", value_name = "FILE")]
        with: Vec<PathBuf>,
        /// Skip derived corings with a larger carrier dimension.
        #[arg(long)]
        size_limit: Option<usize>,
    },

    /// Check the dual-ring isomorphism for base changes.
    BaseChange {
        #[command(flatten)]
        source: Source,
        /// Minimal polynomial of a field extension (repeatable; defaults to the standard set).
        #[arg(long = "ext", value_name = "MINPOLY")]
        extensions: Vec<String>,
    },

    /// The built-in catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),

    /// Check the comodule axioms.
    CheckComodule {
        /// JSON comodule file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },

    /// Check the bicomodule axioms.
    CheckBicomodule(Source),

    /// Round-trip bicomodules through left comodules over `C ⊗ D°` (all catalog
    /// bicomodules when no input is given).
    BicomodEquiv {
        #[arg(long = "in", value_name = "FILE", conflicts_with = "catalog")]
        input: Option<PathBuf>,
        #[arg(long, value_name = "ID")]
        catalog: Option<String>,
    },

    /// Entwining structures.
    #[command(subcommand)]
    Entwine(EntwineCommand),

    /// Print a catalog object as explicit structure constants.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        id: String,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List entries with their expected verdicts.
    List,
    /// Run every decision procedure on the matching entries.
    Run {
        /// Glob over entry ids, e.g. "trivial-*".
        filter: Option<String>,
        /// Also evaluate the equivalence harness.
        #[arg(long)]
        theorem: bool,
        /// Record wall-clock time per entry (reports stop being reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        size_limit: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum EntwineCommand {
    /// Check the entwining axioms.
    Check(Source),
    /// Print the entwined coring as explicit structure constants.
    Coring(Source),
    /// Tensor two entwinings and certify the coring isomorphism.
    Tensor {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        with: WithSource,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
struct WithSource {
    /// JSON file of the second entwining.
    #[arg(long = "with", value_name = "FILE")]
    with: Option<PathBuf>,
    /// Catalog id of the second entwining.
    #[arg(long = "with-catalog", value_name = "ID")]
    with_catalog: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportKind {
    Coring,
    Bicomodule,
    Entwining,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command).and_then(|outcome| commands::emit(&outcome, cli.out.as_deref()).map(|_| outcome)) {
        Ok(outcome) => {
            eprintln!("{} {}", if outcome.pass { "PASS" } else { "FAIL" }, outcome.summary);
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
