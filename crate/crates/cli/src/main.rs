mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Classify subsemimodules, verify theorems and search for counterexamples on
/// finite semimodules.
#[derive(Debug, Parser)]
#[command(name = "semimod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the JSON report here; `-` prints it to stdout instead of the text summary.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a named subsemimodule, or every proper one when no name is given.
    Classify {
        #[arg(long, value_name = "PATH")]
        instance: PathBuf,
        #[arg(long)]
        name: Option<String>,
        /// Refuse subsemimodule products outside multiplication semimodules.
        #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
        strict_products: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check theorems on one instance.
    Verify {
        #[arg(long, value_name = "PATH")]
        instance: PathBuf,
        /// Theorem ids; all registered ids when omitted.
        #[arg(long = "theorem", value_name = "ID", num_args = 1..)]
        theorems: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Check theorems on every instance of a catalog.
    Sweep {
        /// A JSON array of instance documents; the built-in catalog when omitted.
        #[arg(long, value_name = "PATH")]
        catalog: Option<PathBuf>,
        #[arg(long = "theorem", value_name = "ID", num_args = 1..)]
        theorems: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Find the smallest instance separating two primeness notions.
    Search {
        #[arg(long, value_name = "ID")]
        relation: String,
        /// Largest scalar and module carrier considered.
        #[arg(long, default_value_t = 24)]
        cap: usize,
        #[arg(long, value_name = "PATH")]
        catalog: Option<PathBuf>,
        /// Also scan this many random semirings acting on themselves.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest carrier of the random semirings.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Localize an instance at one of its multiplicatively closed sets.
    Localize {
        #[arg(long, value_name = "PATH")]
        instance: PathBuf,
        #[arg(long, value_name = "NAME")]
        tset: String,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, output) = match cli.command {
        Command::Classify { instance, name, strict_products, output } => {
            (commands::classify(&instance, name.as_deref(), strict_products), output)
        }
        Command::Verify { instance, theorems, output } => (commands::verify(&instance, &theorems), output),
        Command::Sweep { catalog, theorems, output } => (commands::sweep(catalog.as_deref(), &theorems), output),
        Command::Search { relation, cap, catalog, random, seed, max_size, output } => {
            let random = commands::RandomPool { count: random, seed, max_size };
            (commands::search(&relation, cap, catalog.as_deref(), random), output)
        }
        Command::Localize { instance, tset, output } => (commands::localize(&instance, &tset), output),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = commands::emit(&report, output.json.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(exit_code(&report))
}

/// 2 when any cell errored, 1 when any cell failed, 0 otherwise.
fn exit_code(report: &report::Report) -> u8 {
    if report.has_error() {
        2
    } else if report.has_fail() {
        1
    } else {
        0
    }
}
