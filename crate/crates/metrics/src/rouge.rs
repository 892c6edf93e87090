use serde::{Deserialize, Serialize};

use crate::{MetricError, TokenSequence};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RougeL {
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
}

/// Longest common subsequence length by dynamic programming, one row at a time.
pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { cur[j].max(prev[j + 1]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Porter stem for tokens longer than three characters, as-is otherwise.
fn stem(token: &str) -> String {
    if token.chars().count() > 3 {
        porter_stemmer::stem(token)
    } else {
        token.to_string()
    }
}

/// ROUGE-L precision, recall and balanced F (β = 1).
pub fn rouge_l(candidate: &TokenSequence, reference: &TokenSequence, stemming: bool) -> Result<RougeL, MetricError> {
    if candidate.is_empty() {
        return Err(MetricError::EmptyInput("candidate"));
    }
    if reference.is_empty() {
        return Err(MetricError::EmptyInput("reference"));
    }
    let prep = |t: &TokenSequence| -> Vec<String> {
        if stemming {
            t.tokens().iter().map(|w| stem(w)).collect()
        } else {
            t.tokens().to_vec()
        }
    };
    let (c, r) = (prep(candidate), prep(reference));
    let lcs = lcs_len(&c, &r) as f64;
    let precision = lcs / c.len() as f64;
    let recall = lcs / r.len() as f64;
    let f = if lcs == 0.0 { 0.0 } else { 2.0 * precision * recall / (precision + recall) };
    Ok(RougeL { precision, recall, f })
}
