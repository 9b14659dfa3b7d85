//! Command-line front end: configuration layering, report rendering and the
//! `xi`, `verify`, `svg` and `series` commands.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod svg;

pub use args::{Cli, Command};
pub use config::{Format, RunConfig};
pub use error::{CliError, CliResult};
pub use report::ReportDocument;

use config::Overrides;

/// Rendered output of a command and the number of failed checks.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub failures: usize,
}

pub fn resolve_config(cli: &Cli) -> CliResult<RunConfig> {
    let file = cli.options.config.as_deref().map(Overrides::from_file).transpose()?;
    RunConfig::resolve(file, Overrides::from_env()?, cli.options.overrides()?)
}

pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let cfg = resolve_config(cli)?;
    let doc = match cli.command {
        Command::Xi => commands::cmd_xi(&cfg)?,
        Command::Verify => commands::cmd_verify(&cfg)?,
        Command::Series => commands::cmd_series(&cfg)?,
        Command::Svg => return Ok(Outcome { output: svg::render(&cfg)?, failures: 0 }),
    };
    Ok(Outcome { output: doc.render(cfg.format), failures: doc.failures().len() })
}

/// Writes to `--out` when given, standard output otherwise.
pub fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    let cfg = resolve_config(cli)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
