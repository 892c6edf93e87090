use std::collections::HashMap;

pub(crate) type Counts<'a> = HashMap<&'a [String], usize>;

pub(crate) fn counts(tokens: &[String], n: usize) -> Counts<'_> {
    let mut out = HashMap::new();
    if n == 0 || tokens.len() < n {
        return out;
    }
    for w in tokens.windows(n) {
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Candidate n-gram counts clipped by the largest count in any reference.
pub(crate) fn clipped_matches<'a>(candidate: &Counts<'a>, references: &[Counts<'_>]) -> Vec<(&'a [String], usize)> {
    let mut out: Vec<(&[String], usize)> = candidate
        .iter()
        .filter_map(|(g, &c)| {
            let max_ref = references.iter().map(|r| r.get(g).copied().unwrap_or(0)).max().unwrap_or(0);
            let m = c.min(max_ref);
            (m > 0).then_some((*g, m))
        })
        .collect();
    out.sort();
    out
}
