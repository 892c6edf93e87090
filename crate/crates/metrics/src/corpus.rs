use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{bleu4, corpus_bleu4, nist, rouge_l, tokenize, MetricError, RougeL, TokenSequence};

/// One generated summary with its human references.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pair {
    pub candidate_id: String,
    pub reference_id: String,
    pub group: String,
    pub candidate: String,
    pub references: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BleuMode {
    /// Mean of sentence scores.
    #[default]
    Sentence,
    /// Pooled counts per group.
    Corpus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairScore {
    pub candidate_id: String,
    pub reference_id: String,
    pub group: String,
    pub bleu4: f64,
    pub nist: f64,
    pub rouge_l: RougeL,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailedPair {
    pub candidate_id: String,
    pub group: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scores {
    pub bleu4: f64,
    pub nist: f64,
    pub rouge_l_precision: f64,
    pub rouge_l_recall: f64,
    pub rouge_l_f: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupReport {
    pub group: String,
    pub scores: Scores,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub bleu_mode: BleuMode,
    pub stemming: bool,
    pub per_pair: Vec<PairScore>,
    pub groups: Vec<GroupReport>,
    pub overall: Scores,
    pub failed: Vec<FailedPair>,
    /// Not computed; always `None`.
    pub frugal_score: Option<f64>,
}

/// ROUGE-L against the reference with the highest F.
fn best_rouge(c: &TokenSequence, refs: &[&TokenSequence], stemming: bool) -> Result<RougeL, MetricError> {
    let mut best: Option<RougeL> = None;
    for r in refs.iter().filter(|r| !r.is_empty()) {
        let s = rouge_l(c, r, stemming)?;
        if best.is_none_or(|b| s.f > b.f) {
            best = Some(s);
        }
    }
    best.ok_or(MetricError::EmptyInput("references"))
}

pub fn score_pair(pair: &Pair, stemming: bool) -> Result<PairScore, MetricError> {
    let c = tokenize(&pair.candidate);
    let refs: Vec<TokenSequence> = pair.references.iter().map(|r| tokenize(r)).collect();
    let refs: Vec<&TokenSequence> = refs.iter().collect();
    Ok(PairScore {
        candidate_id: pair.candidate_id.clone(),
        reference_id: pair.reference_id.clone(),
        group: pair.group.clone(),
        bleu4: bleu4(&c, &refs)?,
        nist: nist(&c, &refs)?,
        rouge_l: best_rouge(&c, &refs, stemming)?,
    })
}

/// Sum of sorted values, so the result does not depend on input order.
fn mean(mut values: Vec<f64>) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    values.iter().sum::<f64>() / values.len() as f64
}

fn pooled_bleu(pairs: &[&Pair]) -> Result<f64, MetricError> {
    let toks: Vec<(TokenSequence, Vec<TokenSequence>)> = pairs
        .iter()
        .map(|p| (tokenize(&p.candidate), p.references.iter().map(|r| tokenize(r)).collect()))
        .collect();
    let borrowed: Vec<(&TokenSequence, Vec<&TokenSequence>)> =
        toks.iter().map(|(c, rs)| (c, rs.iter().collect())).collect();
    corpus_bleu4(&borrowed).map(|b| b.score)
}

fn aggregate(scores: &[&PairScore], pairs: &[&Pair], mode: BleuMode) -> Scores {
    let bleu = match mode {
        BleuMode::Sentence => mean(scores.iter().map(|s| s.bleu4).collect()),
        BleuMode::Corpus => pooled_bleu(pairs).unwrap_or(0.0),
    };
    Scores {
        bleu4: bleu,
        nist: mean(scores.iter().map(|s| s.nist).collect()),
        rouge_l_precision: mean(scores.iter().map(|s| s.rouge_l.precision).collect()),
        rouge_l_recall: mean(scores.iter().map(|s| s.rouge_l.recall).collect()),
        rouge_l_f: mean(scores.iter().map(|s| s.rouge_l.f).collect()),
        count: scores.len(),
    }
}

/// Scores every pair in parallel. Pairs that cannot be scored are listed
/// in `failed` and left out of every mean.
pub fn score_corpus(pairs: &[Pair], mode: BleuMode, stemming: bool) -> MetricReport {
    let results: Vec<Result<PairScore, MetricError>> = pairs.par_iter().map(|p| score_pair(p, stemming)).collect();
    let mut per_pair = Vec::new();
    let mut ok_pairs = Vec::new();
    let mut failed = Vec::new();
    for (pair, r) in pairs.iter().zip(results) {
        match r {
            Ok(s) => {
                per_pair.push(s);
                ok_pairs.push(pair);
            }
            Err(e) => failed.push(FailedPair {
                candidate_id: pair.candidate_id.clone(),
                group: pair.group.clone(),
                reason: e.to_string(),
            }),
        }
    }
    let mut by_group: BTreeMap<&str, (Vec<&PairScore>, Vec<&Pair>)> = BTreeMap::new();
    for (s, p) in per_pair.iter().zip(&ok_pairs) {
        let e = by_group.entry(s.group.as_str()).or_default();
        e.0.push(s);
        e.1.push(p);
    }
    let groups = by_group
        .iter()
        .map(|(g, (s, p))| GroupReport {
            group: g.to_string(),
            scores: aggregate(s, p, mode),
        })
        .collect();
    let all: Vec<&PairScore> = per_pair.iter().collect();
    let overall = aggregate(&all, &ok_pairs, mode);
    MetricReport {
        bleu_mode: mode,
        stemming,
        per_pair,
        groups,
        overall,
        failed,
        frugal_score: None,
    }
}

impl MetricReport {
    /// Aligned plain-text table, one row per group and a final average row.
    pub fn to_table(&self) -> String {
        let header = ["Project", "BLEU-4", "NIST", "ROUGE-L", "FrugalScore"];
        let mut rows: Vec<[String; 5]> = self
            .groups
            .iter()
            .map(|g| row(&g.group, &g.scores, self.frugal_score))
            .collect();
        rows.push(row("Total (avg)", &self.overall, self.frugal_score));
        let mut widths = header.map(str::len);
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[&str]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                .collect();
            let _ = writeln!(out, "{}", padded.join(" | ").trim_end());
        };
        line(&mut out, &header);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        let _ = writeln!(out, "{}", rule.join("-+-"));
        for r in &rows {
            line(&mut out, &r.iter().map(String::as_str).collect::<Vec<_>>());
        }
        if !self.failed.is_empty() {
            let _ = writeln!(out, "\n{} pair(s) could not be scored", self.failed.len());
        }
        out
    }
}

fn row(name: &str, s: &Scores, frugal: Option<f64>) -> [String; 5] {
    [
        name.to_string(),
        format!("{:.4}", s.bleu4),
        format!("{:.4}", s.nist),
        format!("{:.4}", s.rouge_l_f),
        frugal.map_or_else(|| "n/a".to_string(), |f| format!("{f:.4}")),
    ]
}
