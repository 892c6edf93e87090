//! Reference-based scores for generated summaries: BLEU-4, NIST and ROUGE-L,
//! plus per-group aggregation.

mod bleu;
mod corpus;
mod ngram;
mod nist;
mod rouge;
mod tokenize;

pub use bleu::{bleu4, bleu4_breakdown, corpus_bleu4, BleuBreakdown, SMOOTHING_EPSILON};
pub use corpus::{score_corpus, score_pair, BleuMode, FailedPair, GroupReport, MetricReport, Pair, PairScore, Scores};
pub use nist::{nist, nist_breakdown, nist_brevity_factor, NistBreakdown, nist_beta};
pub use rouge::{lcs_len, rouge_l, RougeL};
pub use tokenize::{tokenize, TokenSequence};

/// Largest n-gram order used by BLEU and NIST.
pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
}
