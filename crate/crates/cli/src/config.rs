//! Flat `key = value` configuration files.
//!
//! Keys are the long flag names without dashes prefix (`reset-period`,
//! `layout`, ...); `_` and `-` are interchangeable. `#` starts a comment.
//! Values given on the command line win over the file, which wins over the
//! built-in defaults.

use crate::CliError;
use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

pub const KEYS: &[&str] = &[
    "basis",
    "budget",
    "chain",
    "circuit",
    "denominator",
    "distance",
    "dump",
    "factories",
    "family",
    "format",
    "gates",
    "height",
    "iterations",
    "layout",
    "metric",
    "no-mapping",
    "out",
    "preset",
    "q",
    "ratio",
    "report",
    "reset-period",
    "restarts",
    "samples",
    "seed",
    "snake-length",
    "substrate",
    "target",
    "trials",
    "width",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    entries: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (k, v) = body.split_once('=').ok_or(CliError::Config { line, msg: "expected `key = value`".into() })?;
            let key = k.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Config { line, msg: format!("unknown key `{key}`") });
            }
            if entries.insert(key.clone(), (line, v.trim().to_string())).is_some() {
                return Err(CliError::Config { line, msg: format!("duplicate key `{key}`") });
            }
        }
        Ok(ConfigFile { entries })
    }

    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }
}

/// Resolves each setting from the command line, the config file and a
/// default, in that order.
#[derive(Clone, Copy, Debug)]
pub struct Settings<'a> {
    file: &'a ConfigFile,
}

fn parse_one<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: Display,
{
    s.trim().parse::<T>().map_err(|e| e.to_string())
}

impl<'a> Settings<'a> {
    pub fn new(file: &'a ConfigFile) -> Self {
        Settings { file }
    }

    fn raw(&self, key: &str, cli: Option<&str>) -> Option<(Option<usize>, String)> {
        match cli {
            Some(v) => Some((None, v.to_string())),
            None => self.file.entries.get(key).map(|(l, v)| (Some(*l), v.clone())),
        }
    }

    fn fail(key: &str, line: Option<usize>, msg: String) -> CliError {
        match line {
            Some(line) => CliError::Config { line, msg: format!("{key}: {msg}") },
            None => CliError::Usage(format!("--{key}: {msg}")),
        }
    }

    pub fn optional<T: FromStr>(&self, key: &str, cli: Option<&str>) -> Result<Option<T>, CliError>
    where
        T::Err: Display,
    {
        match self.raw(key, cli) {
            None => Ok(None),
            Some((line, v)) => parse_one(&v).map(Some).map_err(|m| Self::fail(key, line, m)),
        }
    }

    pub fn value<T: FromStr>(&self, key: &str, cli: Option<&str>, default: T) -> Result<T, CliError>
    where
        T::Err: Display,
    {
        Ok(self.optional(key, cli)?.unwrap_or(default))
    }

    /// Comma-separated list.
    pub fn list<T: FromStr>(&self, key: &str, cli: Option<&str>, default: Vec<T>) -> Result<Vec<T>, CliError>
    where
        T::Err: Display,
    {
        match self.raw(key, cli) {
            None => Ok(default),
            Some((line, v)) => v
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(parse_one)
                .collect::<Result<Vec<T>, String>>()
                .map_err(|m| Self::fail(key, line, m)),
        }
    }

    pub fn flag(&self, key: &str, cli: bool) -> Result<bool, CliError> {
        Ok(cli || self.optional::<bool>(key, None)?.unwrap_or(false))
    }
}
