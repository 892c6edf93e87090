use std::io::Write;
use std::path::Path;

use anyhow::Context as _;
use patsum_core::ir::{serialise, IrDocument, IrFile};
use patsum_core::java::SourceFile;
use patsum_core::pipeline::{analyse, ir_file};
use patsum_core::summary::{summarise_with, SummaryDocument, SummaryOptions};
use patsum_metrics::{score_corpus, BleuMode, MetricReport, Pair};
use rayon::prelude::*;

use crate::{load_references, walk_corpus, OutputFormat, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ParseFailure,
    ConfigError,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::ParseFailure => 1,
            Outcome::ConfigError => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] crate::ConfigError),
    #[error("{count} file(s) failed to parse")]
    Parse { count: usize },
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl RunError {
    pub fn outcome(&self) -> Outcome {
        match self {
            RunError::Parse { .. } => Outcome::ParseFailure,
            RunError::Config(_) | RunError::Other(_) => Outcome::ConfigError,
        }
    }
}

/// What a successful run produced.
#[derive(Debug)]
pub struct RunSummary {
    pub document: IrDocument,
    pub summaries: Vec<SummaryDocument>,
    pub rendered: String,
    pub metrics: Option<MetricReport>,
    pub parse_failures: usize,
    pub skipped_files: usize,
}

/// Pattern participants first, then the other classes, each in document order.
pub fn order_summaries(doc: &IrDocument, summaries: Vec<SummaryDocument>) -> Vec<SummaryDocument> {
    let in_pattern = |s: &SummaryDocument| {
        doc.patterns
            .iter()
            .any(|p| p.roles.values().flatten().any(|c| *c == s.qualified_name))
    };
    let (mut first, rest): (Vec<_>, Vec<_>) = summaries.into_iter().partition(in_pattern);
    first.extend(rest);
    first
}

fn render(summaries: &[SummaryDocument], format: OutputFormat) -> anyhow::Result<String> {
    Ok(match format {
        OutputFormat::Text => {
            let blocks: Vec<String> = summaries.iter().map(SummaryDocument::text).collect();
            let mut s = blocks.join("\n\n");
            s.push('\n');
            s
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(summaries)?;
            s.push('\n');
            s
        }
    })
}

fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn parse_all(files: &[SourceFile], root: &Path) -> Vec<Result<IrFile, (String, String)>> {
    files
        .par_iter()
        .map(|f| {
            ir_file(f, Some(root)).map_err(|e| {
                (
                    patsum_core::pipeline::relative_path(&f.path, Some(root)),
                    format!("{}:{}: {}", e.line, e.column, e.message),
                )
            })
        })
        .collect()
}

fn score(config: &RunConfig, project: &str, summaries: &[SummaryDocument]) -> anyhow::Result<Option<MetricReport>> {
    let Some(path) = &config.references else {
        return Ok(None);
    };
    let refs = load_references(path).with_context(|| format!("reading references {}", path.display()))?;
    let mut pairs = Vec::new();
    let mut missing = 0;
    for s in summaries {
        match refs.lookup(&s.qualified_name, &s.class_name) {
            Some((key, text)) => pairs.push(Pair {
                candidate_id: s.qualified_name.clone(),
                reference_id: key.to_string(),
                group: project.to_string(),
                candidate: s.text(),
                references: vec![text.to_string()],
            }),
            None => missing += 1,
        }
    }
    if missing > 0 {
        eprintln!("{missing} class(es) have no reference summary");
    }
    let mode = if config.corpus_bleu { BleuMode::Corpus } else { BleuMode::Sentence };
    Ok(Some(score_corpus(&pairs, mode, true)))
}

/// Runs the pipeline and writes every requested artifact.
pub fn execute(config: &RunConfig) -> Result<RunSummary, RunError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(anyhow::Error::from)?;
    pool.install(|| execute_in_pool(config))
}

fn execute_in_pool(config: &RunConfig) -> Result<RunSummary, RunError> {
    let root = &config.input_root;
    let walk = walk_corpus(root).map_err(anyhow::Error::from)?;
    if walk.skipped > 0 {
        eprintln!("skipped {} non-Java file(s)", walk.skipped);
    }
    let mut files = Vec::new();
    let mut failures = 0;
    for r in parse_all(&walk.files, root) {
        match r {
            Ok(f) => files.push(f),
            Err((path, msg)) => {
                failures += 1;
                eprintln!("parse error {path}:{msg}");
            }
        }
    }
    if failures > 0 && config.fail_on_parse_error {
        return Err(RunError::Parse { count: failures });
    }
    eprintln!("parsed {} file(s)", files.len());

    let project = config.project_name();
    let document = analyse(&project, files, config.patterns_filter.as_deref()).map_err(anyhow::Error::from)?;
    let options = SummaryOptions {
        compat_table1: config.compat_table1,
        compat_table3: config.compat_table3,
    };
    let summaries = order_summaries(&document, summarise_with(&document, options));
    let rendered = render(&summaries, config.output_format)?;
    let metrics = score(config, &project, &summaries)?;

    write_atomic(&config.output_path, rendered.as_bytes())?;
    let dir = config.output_dir();
    if config.emit_ir {
        write_atomic(&dir.join("ir.json"), &serialise(&document))?;
    }
    if let Some(report) = &metrics {
        let mut json = serde_json::to_string_pretty(report).map_err(anyhow::Error::from)?;
        json.push('\n');
        write_atomic(&dir.join("metrics.json"), json.as_bytes())?;
        write_atomic(&dir.join("metrics.txt"), report.to_table().as_bytes())?;
    }
    Ok(RunSummary {
        document,
        summaries,
        rendered,
        metrics,
        parse_failures: failures,
        skipped_files: walk.skipped,
    })
}

/// [`execute`] reduced to an exit status, with the error on standard error.
pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(_) => Outcome::Success,
        Err(e) => {
            eprintln!("error: {e:#}");
            e.outcome()
        }
    }
}
