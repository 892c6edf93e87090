use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::ngram::{clipped_matches, counts};
use crate::{MetricError, TokenSequence, MAX_ORDER};

/// Chosen so the brevity factor is 0.5 at two thirds of the reference length.
pub fn nist_beta() -> f64 {
    let l = 1.5f64.ln();
    0.5f64.ln() / (l * l)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NistBreakdown {
    /// Information-weighted matches divided by candidate n-grams, per order.
    pub order_scores: [f64; MAX_ORDER],
    pub candidate_len: usize,
    pub average_reference_len: f64,
    pub beta: f64,
    pub brevity_factor: f64,
    pub score: f64,
}

/// `exp(β · ln²(min(c / r̄, 1)))`.
pub fn nist_brevity_factor(candidate_len: usize, average_reference_len: f64) -> f64 {
    if average_reference_len <= 0.0 {
        return 1.0;
    }
    let ratio = (candidate_len as f64 / average_reference_len).min(1.0);
    if ratio <= 0.0 {
        return 0.0;
    }
    let l = ratio.ln();
    (nist_beta() * l * l).exp()
}

/// `Info(w1..wn) = log2(count(w1..wn-1) / count(w1..wn))` over the
/// references, with the total word count standing in for the empty prefix.
fn information_weights<'a>(references: &[&'a TokenSequence]) -> HashMap<&'a [String], f64> {
    let mut freq: HashMap<&[String], usize> = HashMap::new();
    let mut total_words = 0usize;
    for r in references {
        total_words += r.len();
        for n in 1..=MAX_ORDER {
            for (g, c) in counts(r.tokens(), n) {
                *freq.entry(g).or_insert(0) += c;
            }
        }
    }
    freq.iter()
        .map(|(g, &c)| {
            let prefix = if g.len() == 1 { total_words } else { freq[&g[..g.len() - 1]] };
            (*g, (prefix as f64 / c as f64).log2())
        })
        .collect()
}

pub fn nist_breakdown(candidate: &TokenSequence, references: &[&TokenSequence]) -> Result<NistBreakdown, MetricError> {
    if candidate.is_empty() {
        return Err(MetricError::EmptyInput("candidate"));
    }
    if references.iter().all(|r| r.is_empty()) {
        return Err(MetricError::EmptyInput("references"));
    }
    let info = information_weights(references);
    let mut order_scores = [0.0; MAX_ORDER];
    for n in 1..=MAX_ORDER {
        let cand = counts(candidate.tokens(), n);
        let refs: Vec<_> = references.iter().map(|r| counts(r.tokens(), n)).collect();
        let weighted: f64 = clipped_matches(&cand, &refs)
            .iter()
            .map(|(g, m)| info.get(g).copied().unwrap_or(0.0) * *m as f64)
            .sum();
        let total = candidate.len().saturating_sub(n - 1).max(1);
        order_scores[n - 1] = weighted / total as f64;
    }
    let average_reference_len = references.iter().map(|r| r.len()).sum::<usize>() as f64 / references.len() as f64;
    let brevity_factor = nist_brevity_factor(candidate.len(), average_reference_len);
    Ok(NistBreakdown {
        order_scores,
        candidate_len: candidate.len(),
        average_reference_len,
        beta: nist_beta(),
        brevity_factor,
        score: order_scores.iter().sum::<f64>() * brevity_factor,
    })
}

/// Sentence NIST with n up to 4.
pub fn nist(candidate: &TokenSequence, references: &[&TokenSequence]) -> Result<f64, MetricError> {
    nist_breakdown(candidate, references).map(|b| b.score)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenize;

    #[test]
    fn brevity_factor_at_two_thirds_is_one_half() {
        assert!((nist_brevity_factor(2, 3.0) - 0.5).abs() < 1e-12);
        assert_eq!(nist_brevity_factor(5, 3.0), 1.0);
    }

    #[test]
    fn disjoint_is_zero() {
        assert_eq!(nist(&tokenize("a b c"), &[&tokenize("d e f")]).unwrap(), 0.0);
    }
}
