//! `fingrpd`: exact finite-groupoid computations from JSON descriptions.
//!
//! Exit status: 0 success, 2 malformed or invalid input, 3 capacity bound
//! exceeded, 4 a failed check or an internal inconsistency.

mod commands;
mod input;
mod suite;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fingrpd::grpd::DEFAULT_ISO_BOUND;
use fingrpd::Error;

use commands::{Flags, Output};

#[derive(Parser)]
#[command(
    name = "fingrpd",
    version,
    about = "Exact computations with finite groupoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homotopy cardinality of a groupoid.
    Cardinality(Common),
    /// Free loop groupoid, or the iterated p-adic one with --p and --h.
    Loop(Common),
    /// Linearized matrix of a chain of spans.
    Span(Common),
    /// Norm map checks for a map and a local system on its source.
    NormCheck(Common),
    /// Beck-Chevalley checks for the pullback of two maps.
    BcCheck(Common),
    /// Induced character against integration along the inclusion.
    InduceCheck(Common),
    /// Chromatic cardinality at prime --p and height --n.
    ChromCard(Common),
    /// Run the full property suite and the documented examples.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct Common {
    /// Input JSON file; standard input when absent or "-".
    input: Option<PathBuf>,
    #[arg(long)]
    p: Option<u64>,
    /// Height (iterated loops) or chromatic level.
    #[arg(long, visible_alias = "n")]
    h: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest group order for brute-force isomorphism search.
    #[arg(long, default_value_t = DEFAULT_ISO_BOUND)]
    iso_bound: usize,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Format(_)
        | Error::InvalidInput(_)
        | Error::Index(_)
        | Error::Shape(_)
        | Error::Composition(_) => 2,
        Error::Capacity { .. } => 3,
        Error::TheoremViolation(_) | Error::Internal(_) => 4,
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Format(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Format(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn emit(out: &Output, format: Format) -> ExitCode {
    match format {
        Format::Plain => println!("{}", out.plain),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("json value")
        ),
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!(
                "fingrpd: {}",
                rendered
                    .lines()
                    .next()
                    .unwrap_or("invalid arguments")
                    .trim_start_matches("error: ")
            );
            return ExitCode::from(2);
        }
    };
    let (name, common) = match &cli.command {
        Command::Suite(args) => return emit(&suite::run(), args.format),
        Command::Cardinality(c) => ("cardinality", c),
        Command::Loop(c) => ("loop", c),
        Command::Span(c) => ("span", c),
        Command::NormCheck(c) => ("norm-check", c),
        Command::BcCheck(c) => ("bc-check", c),
        Command::InduceCheck(c) => ("induce-check", c),
        Command::ChromCard(c) => ("chrom-card", c),
    };
    let flags = Flags {
        p: common.p,
        h: common.h,
        iso_bound: common.iso_bound,
    };
    let result = read_input(&common.input)
        .and_then(|text| input::parse_document(&text))
        .and_then(|doc| commands::run(name, &doc, flags));
    match result {
        Ok(out) => emit(&out, common.format),
        Err(e) => {
            eprintln!("fingrpd: {}", e.to_string().replace('\n', " "));
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(exit_code(&Error::Format("x".into())), 2);
        assert_eq!(exit_code(&Error::InvalidInput("x".into())), 2);
        assert_eq!(exit_code(&Error::Composition("x".into())), 2);
        assert_eq!(exit_code(&Error::Capacity { order: 6, bound: 2 }), 3);
        assert_eq!(exit_code(&Error::TheoremViolation("x".into())), 4);
        assert_eq!(exit_code(&Error::Internal("x".into())), 4);
    }

    #[test]
    fn failed_checks_exit_4() {
        let out = Output {
            plain: "FAIL".into(),
            json: serde_json::Value::Null,
            passed: false,
        };
        assert_eq!(emit(&out, Format::Plain), ExitCode::from(4));
    }
}
