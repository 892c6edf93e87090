use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use patsum_core::patterns::PatternKind;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "patsum", version, about = "Summarise design-pattern roles in a Java source tree")]
pub struct Args {
    /// Project root; every .java file below it is analysed.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Summaries file. ir.json and metrics files go next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Comma-separated pattern kinds to report, e.g. observer,adapter.
    #[arg(long)]
    pub patterns: Option<String>,
    /// Reference summaries: a directory of <Class>.txt files or a JSON map.
    #[arg(long)]
    pub refs: Option<PathBuf>,
    #[arg(long)]
    pub emit_ir: bool,
    /// Method list as `void update`.
    #[arg(long)]
    pub compat_table1: bool,
    /// Creator summaries in the comma-spliced layout.
    #[arg(long)]
    pub compat_table3: bool,
    /// Pooled-count BLEU instead of the mean of sentence scores.
    #[arg(long)]
    pub corpus_bleu: bool,
    /// Worker threads for parsing and scoring; 0 means one per core.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Exit 1 if any file fails to parse.
    #[arg(long)]
    pub strict: bool,
    /// TOML file with the same keys; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Keys accepted in a config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    input: Option<PathBuf>,
    out: Option<PathBuf>,
    format: Option<OutputFormat>,
    patterns: Option<Vec<String>>,
    refs: Option<PathBuf>,
    emit_ir: Option<bool>,
    compat_table1: Option<bool>,
    compat_table3: Option<bool>,
    corpus_bleu: Option<bool>,
    jobs: Option<usize>,
    strict: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input_root: PathBuf,
    pub output_path: PathBuf,
    pub output_format: OutputFormat,
    pub patterns_filter: Option<Vec<PatternKind>>,
    pub references: Option<PathBuf>,
    pub emit_ir: bool,
    pub compat_table1: bool,
    pub compat_table3: bool,
    pub corpus_bleu: bool,
    pub jobs: usize,
    pub fail_on_parse_error: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("missing required option --{0}")]
    Missing(&'static str),
    #[error("input {0} is not a directory")]
    NotADirectory(PathBuf),
    #[error("references {0} do not exist")]
    MissingReferences(PathBuf),
    #[error(transparent)]
    UnknownPattern(#[from] patsum_core::patterns::UnknownPattern),
    #[error("cannot read config {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("bad config {path}: {source}")]
    Parse { path: PathBuf, source: toml::de::Error },
}

fn parse_kinds<S: AsRef<str>>(items: &[S]) -> Result<Vec<PatternKind>, ConfigError> {
    let mut kinds = Vec::new();
    for s in items.iter().map(|s| s.as_ref().trim()).filter(|s| !s.is_empty()) {
        let k: PatternKind = s.parse()?;
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    kinds.sort();
    Ok(kinds)
}

fn read_file_config(path: &Path) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    toml::from_str(&text).map_err(|source| ConfigError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

impl RunConfig {
    /// Minimal config with defaults for everything but the two paths.
    pub fn new(input_root: impl Into<PathBuf>, output_path: impl Into<PathBuf>) -> Self {
        RunConfig {
            input_root: input_root.into(),
            output_path: output_path.into(),
            output_format: OutputFormat::Text,
            patterns_filter: None,
            references: None,
            emit_ir: false,
            compat_table1: false,
            compat_table3: false,
            corpus_bleu: false,
            jobs: 0,
            fail_on_parse_error: false,
        }
    }

    /// Merges flags over the optional config file and checks the result.
    pub fn from_args(args: Args) -> Result<Self, ConfigError> {
        let file = match &args.config {
            Some(p) => read_file_config(p)?,
            None => FileConfig::default(),
        };
        let patterns_filter = match (&args.patterns, &file.patterns) {
            (Some(csv), _) => Some(parse_kinds(&csv.split(',').collect::<Vec<_>>())?),
            (None, Some(list)) => Some(parse_kinds(list)?),
            (None, None) => None,
        };
        let config = RunConfig {
            input_root: args.input.or(file.input).ok_or(ConfigError::Missing("input"))?,
            output_path: args.out.or(file.out).ok_or(ConfigError::Missing("out"))?,
            output_format: args.format.or(file.format).unwrap_or_default(),
            patterns_filter,
            references: args.refs.or(file.refs),
            emit_ir: args.emit_ir || file.emit_ir.unwrap_or(false),
            compat_table1: args.compat_table1 || file.compat_table1.unwrap_or(false),
            compat_table3: args.compat_table3 || file.compat_table3.unwrap_or(false),
            corpus_bleu: args.corpus_bleu || file.corpus_bleu.unwrap_or(false),
            jobs: args.jobs.or(file.jobs).unwrap_or(0),
            fail_on_parse_error: args.strict || file.strict.unwrap_or(false),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !self.input_root.is_dir() {
            return Err(ConfigError::NotADirectory(self.input_root.clone()));
        }
        if let Some(r) = &self.references {
            if !r.exists() {
                return Err(ConfigError::MissingReferences(r.clone()));
            }
        }
        Ok(())
    }

    /// Directory receiving ir.json and the metric reports.
    pub fn output_dir(&self) -> PathBuf {
        match self.output_path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
            _ => PathBuf::from("."),
        }
    }

    /// Project label: the input directory's name.
    pub fn project_name(&self) -> String {
        let canonical = self.input_root.canonicalize().unwrap_or_else(|_| self.input_root.clone());
        canonical
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "project".to_string())
    }
}
