use std::process::ExitCode;

use clap::Parser;
use cosetlab_cli::{emit, execute, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|outcome| {
        emit(&cli, &outcome.output)?;
        match outcome.failures {
            0 => Ok(()),
            n => Err(CliError::Verification(n)),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cosetlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
