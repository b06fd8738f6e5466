use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use purcell::cli::{parse_config, run, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Field,
    Simulate,
    Verify,
}

/// Connection fields, gait simulation and closed-form verification for the
/// three-link swimmer.
#[derive(Debug, Parser)]
#[command(name = "purcell", version)]
struct Args {
    command: Command,
    /// JSON configuration file, or `-` for standard input.
    #[arg(long)]
    config: PathBuf,
    /// Directory for output files.
    #[arg(long, default_value = ".")]
    output: PathBuf,
    /// Do not print the list of written files.
    #[arg(long)]
    quiet: bool,
}

fn read_config(path: &PathBuf) -> Result<String, CliError> {
    let io_err = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn main_inner(args: &Args) -> Result<(), CliError> {
    let mut config = parse_config(&read_config(&args.config)?)?;
    let expected = match args.command {
        Command::Field => "field",
        Command::Simulate => "simulate",
        Command::Verify => "verify",
    };
    if config.command() != expected {
        return Err(CliError::Config {
            path: "command".into(),
            reason: format!("config is for `{}` but `{expected}` was requested", config.command()),
        });
    }
    config.output = args.output.clone();
    let written = run(&config)?;
    if !args.quiet {
        for path in written {
            println!("{}", path.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match main_inner(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::FAILURE
        }
    }
}
