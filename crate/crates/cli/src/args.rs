use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{parse_cap, parse_list, parse_rho, Format, Overrides, RhoKind};
use crate::error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "cosetlab", version, about = "Parabolic coset posets and positive chamber complexes of finite Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Top-homology character, its sign twist and (type A) Frobenius images.
    Xi,
    /// Run the cross-validation suite for one group.
    Verify,
    /// Draw the positive complex of a rank-3 group as SVG.
    Svg,
    /// Generating-function data for the symmetric groups.
    Series,
}

#[derive(Debug, Default, Args)]
pub struct GlobalOptions {
    /// Group symbol such as A3, B4, D4, G2 or F4.
    #[arg(long, global = true)]
    pub group: Option<String>,

    /// How to choose the generic vector: seed, prop75 or user.
    #[arg(long, global = true)]
    pub rho_mode: Option<String>,

    #[arg(long, global = true)]
    pub rho_seed: Option<u64>,

    /// Comma-separated rationals in the fundamental-weight basis.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub rho: Option<String>,

    /// Truncation order for `series`.
    #[arg(short = 'n', long, global = true)]
    pub order: Option<usize>,

    /// Output format: json, csv or text.
    #[arg(long, global = true)]
    pub format: Option<String>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest group order to enumerate (also read from COSETLAB_CAP).
    #[arg(long, global = true)]
    pub cap: Option<String>,

    /// Number of consecutive seeds to try in `verify`.
    #[arg(long, global = true)]
    pub seeds: Option<usize>,

    /// Comma-separated subset of checks for `verify`.
    #[arg(long, global = true)]
    pub checks: Option<String>,

    /// Flat `key = value` configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

impl GlobalOptions {
    pub fn overrides(&self) -> CliResult<Overrides> {
        Ok(Overrides {
            group: self.group.clone(),
            rho_mode: self.rho_mode.as_deref().map(str::parse::<RhoKind>).transpose()?,
            rho_seed: self.rho_seed,
            rho: self.rho.as_deref().map(parse_rho).transpose()?,
            order: self.order,
            format: self.format.as_deref().map(str::parse::<Format>).transpose()?,
            out: self.out.clone(),
            cap: self.cap.as_deref().map(parse_cap).transpose()?,
            seeds: self.seeds,
            checks: self.checks.as_deref().map(parse_list),
        })
    }
}
