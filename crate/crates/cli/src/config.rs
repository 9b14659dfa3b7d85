//! Run configuration: command-line flags over `COSETLAB_CAP` over a
//! `key=value` file over built-in defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use cosetlab_core::coxgroup::DEFAULT_GROUP_CAP;
use cosetlab_core::{Rational, RhoMode};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const CAP_ENV: &str = "COSETLAB_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(CliError::Usage(format!("unknown format `{s}` (expected json, csv or text)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoKind {
    Seed,
    Prop75,
    User,
}

impl FromStr for RhoKind {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "seed" => Ok(RhoKind::Seed),
            "prop75" => Ok(RhoKind::Prop75),
            "user" => Ok(RhoKind::User),
            _ => Err(CliError::Usage(format!("unknown rho mode `{s}` (expected seed, prop75 or user)"))),
        }
    }
}

impl fmt::Display for RhoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoKind::Seed => "seed",
            RhoKind::Prop75 => "prop75",
            RhoKind::User => "user",
        })
    }
}

/// Settings that may come from any layer. `None` means "not set here".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub group: Option<String>,
    pub rho_mode: Option<RhoKind>,
    pub rho_seed: Option<u64>,
    pub rho: Option<Vec<Rational>>,
    pub order: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub cap: Option<u128>,
    pub seeds: Option<usize>,
    pub checks: Option<Vec<String>>,
}

impl Overrides {
    /// Fields set in `other` replace ours.
    pub fn merge(mut self, other: Overrides) -> Overrides {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(group, rho_mode, rho_seed, rho, order, format, out, cap, seeds, checks);
        self
    }

    pub fn from_file(path: &Path) -> CliResult<Overrides> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config file {}: {e}", path.display())))?;
        Overrides::parse_file(&text)
    }

    /// Parses flat `key = value` lines; `#` starts a comment.
    pub fn parse_file(text: &str) -> CliResult<Overrides> {
        let mut o = Overrides::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", lineno + 1)))?;
            let (key, value) = (key.trim().replace('-', "_"), value.trim());
            let bad = |what: &str| CliError::Usage(format!("config line {}: invalid {what} `{value}`", lineno + 1));
            match key.as_str() {
                "group" => o.group = Some(value.to_string()),
                "rho_mode" => o.rho_mode = Some(value.parse()?),
                "rho_seed" => o.rho_seed = Some(value.parse().map_err(|_| bad("seed"))?),
                "rho" => o.rho = Some(parse_rho(value)?),
                "order" | "n" => o.order = Some(value.parse().map_err(|_| bad("order"))?),
                "format" => o.format = Some(value.parse()?),
                "out" => o.out = Some(PathBuf::from(value)),
                "cap" => o.cap = Some(parse_cap(value)?),
                "seeds" => o.seeds = Some(value.parse().map_err(|_| bad("seed count"))?),
                "checks" => o.checks = Some(parse_list(value)),
                _ => return Err(CliError::Usage(format!("config line {}: unknown key `{key}`", lineno + 1))),
            }
        }
        Ok(o)
    }

    pub fn from_env() -> CliResult<Overrides> {
        let cap = match std::env::var(CAP_ENV) {
            Ok(v) if !v.trim().is_empty() => Some(parse_cap(&v)?),
            _ => None,
        };
        Ok(Overrides { cap, ..Overrides::default() })
    }
}

pub fn parse_cap(s: &str) -> CliResult<u128> {
    let s = s.trim().replace('_', "");
    s.parse::<u128>()
        .ok()
        .filter(|&c| c > 0)
        .ok_or_else(|| CliError::Usage(format!("invalid cap `{s}`")))
}

pub fn parse_rho(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Rational>()
                .map_err(|_| CliError::Usage(format!("invalid rational `{}` in rho", t.trim())))
        })
        .collect()
}

pub fn parse_list(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub group: Option<String>,
    pub rho_mode: RhoKind,
    pub rho_seed: u64,
    pub rho: Option<Vec<Rational>>,
    pub order: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cap: u128,
    pub seeds: usize,
    pub checks: Option<Vec<String>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: None,
            rho_mode: RhoKind::Seed,
            rho_seed: 1,
            rho: None,
            order: 6,
            format: Format::Text,
            out: None,
            cap: DEFAULT_GROUP_CAP,
            seeds: 3,
            checks: None,
        }
    }
}

impl RunConfig {
    /// Applies the layers in increasing priority.
    pub fn resolve(file: Option<Overrides>, env: Overrides, flags: Overrides) -> CliResult<RunConfig> {
        let o = file.unwrap_or_default().merge(env).merge(flags);
        let d = RunConfig::default();
        let cfg = RunConfig {
            group: o.group,
            rho_mode: o.rho_mode.unwrap_or(if o.rho.is_some() { RhoKind::User } else { d.rho_mode }),
            rho_seed: o.rho_seed.unwrap_or(d.rho_seed),
            rho: o.rho,
            order: o.order.unwrap_or(d.order),
            format: o.format.unwrap_or(d.format),
            out: o.out,
            cap: o.cap.unwrap_or(d.cap),
            seeds: o.seeds.unwrap_or(d.seeds),
            checks: o.checks,
        };
        if cfg.rho_mode == RhoKind::User && cfg.rho.is_none() {
            return Err(CliError::Usage("rho mode `user` needs --rho".into()));
        }
        if cfg.seeds == 0 {
            return Err(CliError::Usage("--seeds must be at least 1".into()));
        }
        Ok(cfg)
    }

    pub fn require_group(&self) -> CliResult<&str> {
        self.group.as_deref().ok_or_else(|| CliError::Usage("missing --group".into()))
    }

    /// The vector-choice modes to run, one per seed in seeded mode.
    pub fn rho_modes(&self) -> Vec<RhoMode> {
        match self.rho_mode {
            RhoKind::Seed => (0..self.seeds as u64).map(|k| RhoMode::SeededRandom(self.rho_seed + k)).collect(),
            RhoKind::Prop75 => vec![RhoMode::Spread],
            RhoKind::User => vec![RhoMode::User(self.rho.clone().unwrap_or_default())],
        }
    }

    pub fn check_enabled(&self, name: &str) -> bool {
        self.checks.as_ref().is_none_or(|c| c.iter().any(|x| x == name))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "rho_mode": self.rho_mode.to_string(),
            "rho_seed": self.rho_seed,
            "rho": self.rho.as_ref().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
            "order": self.order,
            "format": self.format.to_string(),
            "cap": self.cap.to_string(),
            "seeds": self.seeds,
            "checks": self.checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_env_override_file() {
        let file = Overrides::parse_file("group = B3\n# comment\ncap=500\nseeds = 4\nformat=csv\n").unwrap();
        let env = Overrides { cap: Some(700), ..Overrides::default() };
        let flags = Overrides { group: Some("A2".into()), ..Overrides::default() };
        let cfg = RunConfig::resolve(Some(file), env, flags).unwrap();
        assert_eq!(cfg.group.as_deref(), Some("A2"));
        assert_eq!(cfg.cap, 700);
        assert_eq!(cfg.seeds, 4);
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn bad_lines_are_usage_errors() {
        assert!(Overrides::parse_file("group").is_err());
        assert!(Overrides::parse_file("colour = red").is_err());
        assert!(Overrides::parse_file("seeds = many").is_err());
        assert!(parse_cap("0").is_err());
        assert_eq!(parse_rho("1/2, 3").unwrap().len(), 2);
    }

    #[test]
    fn user_rho_requires_a_vector() {
        let flags = Overrides { rho_mode: Some(RhoKind::User), ..Overrides::default() };
        assert!(RunConfig::resolve(None, Overrides::default(), flags).is_err());
        let flags = Overrides { rho: Some(parse_rho("2,1").unwrap()), ..Overrides::default() };
        assert_eq!(RunConfig::resolve(None, Overrides::default(), flags).unwrap().rho_mode, RhoKind::User);
    }
}
