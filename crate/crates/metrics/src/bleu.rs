use serde::{Deserialize, Serialize};

use crate::ngram::{clipped_matches, counts};
use crate::{MetricError, TokenSequence, MAX_ORDER};

/// Added to a zero matched-count numerator before taking the log.
pub const SMOOTHING_EPSILON: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BleuBreakdown {
    /// Clipped matches per order.
    pub matches: [usize; MAX_ORDER],
    /// Candidate n-gram totals per order (at least 1).
    pub totals: [usize; MAX_ORDER],
    /// Smoothed modified precisions.
    pub precisions: [f64; MAX_ORDER],
    pub weights: [f64; MAX_ORDER],
    pub candidate_len: usize,
    pub reference_len: usize,
    pub brevity_penalty: f64,
    pub score: f64,
}

/// Reference length closest to `c`, the shorter one on ties.
fn closest_ref_len(c: usize, refs: &[&TokenSequence]) -> usize {
    refs.iter()
        .map(|r| r.len())
        .min_by_key(|&r| (r.abs_diff(c), r))
        .unwrap_or(0)
}

fn brevity_penalty(c: usize, r: usize) -> f64 {
    if c == 0 {
        0.0
    } else if c > r {
        1.0
    } else {
        (1.0 - r as f64 / c as f64).exp()
    }
}

fn combine(matches: [usize; MAX_ORDER], totals: [usize; MAX_ORDER], c: usize, r: usize) -> BleuBreakdown {
    let weights = [1.0 / MAX_ORDER as f64; MAX_ORDER];
    let mut precisions = [0.0; MAX_ORDER];
    for n in 0..MAX_ORDER {
        let num = if matches[n] == 0 { SMOOTHING_EPSILON } else { matches[n] as f64 };
        precisions[n] = num / totals[n] as f64;
    }
    let bp = brevity_penalty(c, r);
    let log_sum: f64 = precisions.iter().zip(weights).map(|(p, w)| w * p.ln()).sum();
    BleuBreakdown {
        matches,
        totals,
        precisions,
        weights,
        candidate_len: c,
        reference_len: r,
        brevity_penalty: bp,
        score: bp * log_sum.exp(),
    }
}

fn accumulate(
    candidate: &TokenSequence,
    references: &[&TokenSequence],
    matches: &mut [usize; MAX_ORDER],
    totals: &mut [usize; MAX_ORDER],
) {
    for n in 1..=MAX_ORDER {
        let cand = counts(candidate.tokens(), n);
        let refs: Vec<_> = references.iter().map(|r| counts(r.tokens(), n)).collect();
        matches[n - 1] += clipped_matches(&cand, &refs).iter().map(|(_, m)| m).sum::<usize>();
        totals[n - 1] += candidate.len().saturating_sub(n - 1).max(1);
    }
}

fn check(candidate: &TokenSequence, references: &[&TokenSequence]) -> Result<(), MetricError> {
    if candidate.is_empty() {
        return Err(MetricError::EmptyInput("candidate"));
    }
    if references.iter().all(|r| r.is_empty()) {
        return Err(MetricError::EmptyInput("references"));
    }
    Ok(())
}

/// Sentence BLEU-4 with every intermediate quantity.
pub fn bleu4_breakdown(candidate: &TokenSequence, references: &[&TokenSequence]) -> Result<BleuBreakdown, MetricError> {
    check(candidate, references)?;
    let mut matches = [0; MAX_ORDER];
    let mut totals = [0; MAX_ORDER];
    accumulate(candidate, references, &mut matches, &mut totals);
    let r = closest_ref_len(candidate.len(), references);
    Ok(combine(matches, totals, candidate.len(), r))
}

/// Sentence-level BLEU-4: uniform weights, clipped counts, closest
/// reference brevity penalty, epsilon smoothing of zero matches.
pub fn bleu4(candidate: &TokenSequence, references: &[&TokenSequence]) -> Result<f64, MetricError> {
    bleu4_breakdown(candidate, references).map(|b| b.score)
}

/// Corpus-level BLEU-4: counts and lengths summed over all pairs before
/// the precisions are formed.
pub fn corpus_bleu4(pairs: &[(&TokenSequence, Vec<&TokenSequence>)]) -> Result<BleuBreakdown, MetricError> {
    if pairs.is_empty() {
        return Err(MetricError::EmptyInput("pairs"));
    }
    let mut matches = [0; MAX_ORDER];
    let mut totals = [0; MAX_ORDER];
    let (mut c, mut r) = (0, 0);
    for (cand, refs) in pairs {
        check(cand, refs)?;
        accumulate(cand, refs, &mut matches, &mut totals);
        c += cand.len();
        r += closest_ref_len(cand.len(), refs);
    }
    Ok(combine(matches, totals, c, r))
}
