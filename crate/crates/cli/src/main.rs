//! `catzeta` — zeta functions, Möbius inversion, and Euler
//! characteristics of finite categories, from the command line.

use catzeta_cli::commands::{self, OutputFormat, Printer, EXIT_INPUT};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "catzeta",
    version,
    about = "Zeta functions, Möbius inversion, and Euler characteristics of finite categories"
)]
struct Cli {
    /// Output format: human-readable text or machine-readable JSON.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// In text mode, print only verdict lines.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a lawful category.
    Validate { file: PathBuf },

    /// Print the adjacency (morphism-count) matrix.
    Adjacency { file: PathBuf },

    /// Print the chain counts N_m for m = 0..=M.
    Nerve {
        file: PathBuf,
        #[arg(long = "max-m", value_name = "M", default_value_t = 8)]
        max_m: u32,
    },

    /// Print the zeta function, either as an exact power series or in
    /// closed form over the spectrum.
    #[command(group(
        clap::ArgGroup::new("mode")
            .required(true)
            .args(["series", "closed_form"]),
    ))]
    Zeta {
        file: PathBuf,
        /// Exact power series coefficients through z^M.
        #[arg(long, value_name = "M")]
        series: Option<u32>,
        /// Closed-form factorization (needs Möbius inversion).
        #[arg(long)]
        closed_form: bool,
    },

    /// Print the series and Möbius Euler characteristics.
    Euler { file: PathBuf },

    /// Verify the closed-form identities, chain counts, Euler agreement,
    /// classification, and lemma suite for one category.
    Verify {
        file: PathBuf,
        /// Chain-count comparison horizon.
        #[arg(long, default_value_t = 20)]
        horizon: u32,
        /// Relative tolerance for numeric-track comparisons.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },

    /// Generate the deterministic corpus and verify every category in it.
    VerifyCorpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON corpus-spec file overriding the default class mix.
        #[arg(long)]
        spec: Option<PathBuf>,
    },

    /// Run the coefficient-identity lemma suite on a category.
    Lemmas { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };

    let printer = Printer {
        format: match cli.format {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Structured => OutputFormat::Structured,
        },
        quiet: cli.quiet,
    };

    let code = match cli.command {
        Command::Validate { file } => commands::validate(&file, &printer),
        Command::Adjacency { file } => commands::adjacency(&file, &printer),
        Command::Nerve { file, max_m } => commands::nerve(&file, max_m, &printer),
        Command::Zeta {
            file,
            series,
            closed_form,
        } => match series {
            Some(order) => commands::zeta_series_cmd(&file, order, &printer),
            None => {
                debug_assert!(closed_form);
                commands::zeta_closed_form(&file, &printer)
            }
        },
        Command::Euler { file } => commands::euler(&file, &printer),
        Command::Verify { file, horizon, tol } => commands::verify(&file, horizon, tol, &printer),
        Command::VerifyCorpus { seed, spec } => {
            commands::verify_corpus(seed, spec.as_deref(), &printer)
        }
        Command::Lemmas { file } => commands::lemmas(&file, &printer),
    };
    ExitCode::from(code)
}
