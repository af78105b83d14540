use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use paraframe::catalog::{builtin, resolve, BUILTIN_NAMES};
use paraframe::report::{run_check, CheckOptions, Selection};

/// Exact curvature checks for almost paracontact metric Lie-group frames.
#[derive(Parser)]
#[command(name = "paraframe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a model and run the identity suite on it.
    Check {
        /// Builtin model name or path to a model file.
        model: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Comma-separated identity or implication names, or `all`.
        #[arg(long, default_value = "all")]
        identities: String,
        /// Comma-separated classification flags that must hold; prefix `!`
        /// for flags that must not.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Builtin model catalog.
    Models {
        #[command(subcommand)]
        action: ModelsAction,
    },
}

#[derive(Subcommand)]
enum ModelsAction {
    /// Print the builtin model names.
    List,
    /// Print the canonical file encoding of a builtin model.
    Export { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Check {
            model,
            report,
            identities,
            expect,
        } => {
            let options = Selection::parse(&identities).and_then(|selection| {
                let expectations = match &expect {
                    Some(text) => CheckOptions::parse_expectations(text)?,
                    None => Vec::new(),
                };
                Ok(CheckOptions {
                    selection,
                    expectations,
                })
            });
            let options = match options {
                Ok(o) => o,
                Err(e) => return input_error(e),
            };
            let outcome = resolve(&model).and_then(|spec| run_check(&spec, &options));
            match outcome {
                Ok(run) => {
                    match report {
                        Format::Text => println!("{run}"),
                        Format::Machine => print!("{}", run.to_machine()),
                    }
                    ExitCode::from(run.exit_code() as u8)
                }
                Err(e) => input_error(e),
            }
        }
        Command::Models { action } => match action {
            ModelsAction::List => {
                for name in BUILTIN_NAMES {
                    println!("{name}");
                }
                ExitCode::SUCCESS
            }
            ModelsAction::Export { name } => match builtin(&name) {
                Ok(spec) => {
                    print!("{}", spec.to_json());
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(e),
            },
        },
    }
}
