//! Run configuration: flags override a flat `key = value` file, which
//! overrides built-in defaults.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use centilink_core::{IterativeConfig, DEFAULT_TOP_X};

use crate::args::Tuning;
use crate::error::CliError;

/// Keys accepted in a config file. `-` and `_` are interchangeable.
pub const KEYS: &[&str] = &[
    "dict_dir",
    "top_x",
    "measure",
    "mode",
    "damping",
    "tol",
    "max_iter",
    "workers",
    "dis_keep_graph",
];

/// Settings read from a config file; every field optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    pub dict_dir: Option<PathBuf>,
    pub top_x: Option<usize>,
    pub measure: Option<String>,
    pub mode: Option<String>,
    pub damping: Option<f64>,
    pub tol: Option<f64>,
    pub max_iter: Option<usize>,
    pub workers: Option<usize>,
    pub dis_keep_graph: Option<bool>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|msg| CliError::usage(format!("{}: {msg}", path.display())))
    }

    /// Blank lines and `#` comments are skipped; unknown keys are rejected
    /// so typos do not silently fall back to defaults.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = ConfigFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {lineno}: expected `key = value`"))?;
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            let bad = |what: &str| format!("line {lineno}: {key} expects {what}, got {value:?}");
            match key.as_str() {
                "dict_dir" => cfg.dict_dir = Some(PathBuf::from(value)),
                "top_x" => cfg.top_x = Some(parse(value).map_err(|_| bad("an integer"))?),
                "measure" => cfg.measure = Some(value.to_owned()),
                "mode" => cfg.mode = Some(value.to_owned()),
                "damping" => cfg.damping = Some(parse(value).map_err(|_| bad("a number"))?),
                "tol" | "tolerance" => cfg.tol = Some(parse(value).map_err(|_| bad("a number"))?),
                "max_iter" | "max_iterations" => {
                    cfg.max_iter = Some(parse(value).map_err(|_| bad("an integer"))?)
                }
                "workers" => cfg.workers = Some(parse(value).map_err(|_| bad("an integer"))?),
                "dis_keep_graph" => {
                    cfg.dis_keep_graph = Some(parse(value).map_err(|_| bad("true or false"))?)
                }
                _ => {
                    return Err(format!(
                        "line {lineno}: unknown key {key:?} (known: {})",
                        KEYS.join(", ")
                    ))
                }
            }
        }
        Ok(cfg)
    }
}

fn parse<T: FromStr>(s: &str) -> Result<T, T::Err> {
    s.parse()
}

/// Fully resolved settings shared by `link`, `evaluate` and `bench`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub dict_dir: Option<PathBuf>,
    pub top_x: usize,
    pub measure: Option<String>,
    pub mode: Option<String>,
    pub iterative: IterativeConfig,
    pub workers: usize,
    pub keep_graph: bool,
}

impl RunConfig {
    pub fn resolve(
        file: Option<&Path>,
        flags: &Tuning,
        measure: Option<&str>,
        mode: Option<&str>,
        keep_graph: bool,
    ) -> Result<Self, CliError> {
        let file = match file {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let defaults = IterativeConfig::default();
        let cfg = RunConfig {
            dict_dir: flags.dict_dir.clone().or(file.dict_dir),
            top_x: flags.top_x.or(file.top_x).unwrap_or(DEFAULT_TOP_X),
            measure: measure.map(str::to_owned).or(file.measure),
            mode: mode.map(str::to_owned).or(file.mode),
            iterative: IterativeConfig {
                tolerance: flags.tol.or(file.tol).unwrap_or(defaults.tolerance),
                max_iterations: flags.max_iter.or(file.max_iter).unwrap_or(defaults.max_iterations),
                damping: flags.damping.or(file.damping).unwrap_or(defaults.damping),
            },
            workers: flags.workers.or(file.workers).unwrap_or(1),
            keep_graph: keep_graph || file.dis_keep_graph.unwrap_or(false),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.top_x == 0 {
            return Err(CliError::usage("--top-x must be at least 1"));
        }
        if self.workers == 0 {
            return Err(CliError::usage("--workers must be at least 1"));
        }
        self.iterative
            .validate()
            .map_err(|e| CliError::usage(e.to_string()))
    }

    pub fn dict_dir(&self) -> Result<&Path, CliError> {
        self.dict_dir
            .as_deref()
            .ok_or_else(|| CliError::usage("--dict-dir is required (flag or `dict_dir` in --config)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_aliases() {
        let cfg = ConfigFile::parse("# run\n top-x = 5 \nmax_iterations=40 # inline\n\ndis-keep-graph = true\n").unwrap();
        assert_eq!(cfg.top_x, Some(5));
        assert_eq!(cfg.max_iter, Some(40));
        assert_eq!(cfg.dis_keep_graph, Some(true));
        assert_eq!(cfg.damping, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(ConfigFile::parse("topx = 3").unwrap_err().contains("unknown key"));
        assert!(ConfigFile::parse("top_x = three").unwrap_err().contains("line 1"));
        assert!(ConfigFile::parse("top_x 3").is_err());
    }

    #[test]
    fn flags_beat_file_beat_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        fs::write(&path, "top_x = 5\ndamping = 0.5\nmeasure = hits\n").unwrap();
        let flags = Tuning {
            top_x: Some(2),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(Some(&path), &flags, None, None, false).unwrap();
        assert_eq!(cfg.top_x, 2);
        assert_eq!(cfg.iterative.damping, 0.5);
        assert_eq!(cfg.iterative.max_iterations, 100);
        assert_eq!(cfg.measure.as_deref(), Some("hits"));
        let cfg = RunConfig::resolve(Some(&path), &flags, Some("degree"), None, false).unwrap();
        assert_eq!(cfg.measure.as_deref(), Some("degree"));
    }

    #[test]
    fn zero_workers_is_a_usage_error() {
        let flags = Tuning {
            workers: Some(0),
            ..Default::default()
        };
        let err = RunConfig::resolve(None, &flags, None, None, false).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
