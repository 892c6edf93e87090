use patsum_metrics::{
    bleu4, bleu4_breakdown, corpus_bleu4, nist, nist_breakdown, nist_brevity_factor, rouge_l, score_corpus, tokenize,
    BleuMode, MetricError, Pair, TokenSequence,
};

const TOL: f64 = 1e-12;

fn toks(s: &str) -> TokenSequence {
    tokenize(s)
}

#[test]
fn bleu_by_hand_short_candidate() {
    // p1 = 3/3, p2 = 2/2, p3 = 1/1, p4 = 0.1/1, BP = exp(1 - 4/3)
    let c = toks("the cat sat");
    let r = toks("the cat sat down");
    let expected = (1.0f64 - 4.0 / 3.0).exp() * 0.1f64.powf(0.25);
    let b = bleu4_breakdown(&c, &[&r]).unwrap();
    assert_eq!(b.matches, [3, 2, 1, 0]);
    assert_eq!(b.totals, [3, 2, 1, 1]);
    assert!((b.score - expected).abs() < TOL, "{} vs {expected}", b.score);
    assert!((b.score - 0.402_935_2).abs() < 1e-6);
}

#[test]
fn bleu_by_hand_clipping() {
    // "the the the the" vs "the cat": p1 = 1/4 (clipped), others smoothed
    let c = toks("the the the the");
    let r = toks("the cat");
    let expected = (0.25f64 * (0.1 / 3.0) * (0.1 / 2.0) * 0.1).powf(0.25);
    assert!((bleu4(&c, &[&r]).unwrap() - expected).abs() < TOL);
}

#[test]
fn bleu_disjoint_is_small_but_positive() {
    let b = bleu4(&toks("a b c d e"), &[&toks("f g h i j")]).unwrap();
    let expected = 0.1 / (5.0f64 * 4.0 * 3.0 * 2.0).powf(0.25);
    assert!((b - expected).abs() < TOL);
    assert!(b > 0.0 && b < 0.05);
}

#[test]
fn bleu_picks_closest_reference_length() {
    let c = toks("a b c d");
    let short = toks("a b");
    let long = toks("a b c d e f g h");
    let b = bleu4_breakdown(&c, &[&long, &short]).unwrap();
    assert_eq!(b.reference_len, 2);
    assert_eq!(b.brevity_penalty, 1.0);
}

#[test]
fn corpus_bleu_pools_counts() {
    let a = (toks("the cat sat"), toks("the cat sat down"));
    let b = (toks("a dog ran off"), toks("a dog ran off"));
    let pooled = corpus_bleu4(&[(&a.0, vec![&a.1]), (&b.0, vec![&b.1])]).unwrap();
    assert_eq!(pooled.matches, [7, 5, 3, 1]);
    assert_eq!(pooled.totals, [7, 5, 3, 2]);
    let expected = (1.0f64 - 8.0 / 7.0).exp() * (0.5f64).powf(0.25);
    assert!((pooled.score - expected).abs() < TOL);
}

#[test]
fn nist_brevity_factor_half_at_two_thirds() {
    for r in [3usize, 6, 30, 300] {
        let c = r * 2 / 3;
        assert!((nist_brevity_factor(c, r as f64) - 0.5).abs() < 1e-12, "r={r}");
    }
    assert_eq!(nist_brevity_factor(10, 10.0), 1.0);
    assert_eq!(nist_brevity_factor(0, 10.0), 0.0);
}

/// Naive NIST from first principles: linear-scan counting, no maps.
fn nist_oracle(c: &[String], refs: &[Vec<String>]) -> f64 {
    fn grams(t: &[String], n: usize) -> Vec<Vec<String>> {
        if t.len() < n {
            return vec![];
        }
        (0..=t.len() - n).map(|i| t[i..i + n].to_vec()).collect()
    }
    fn occurrences(g: &[String], refs: &[Vec<String>]) -> usize {
        refs.iter().map(|r| grams(r, g.len()).iter().filter(|x| x.as_slice() == g).count()).sum()
    }
    let total_words: usize = refs.iter().map(Vec::len).sum();
    let mut score = 0.0;
    for n in 1..=4 {
        let cg = grams(c, n);
        let mut seen: Vec<Vec<String>> = vec![];
        let mut weighted = 0.0;
        for g in &cg {
            if seen.contains(g) {
                continue;
            }
            seen.push(g.clone());
            let in_cand = cg.iter().filter(|x| *x == g).count();
            let best_ref = refs
                .iter()
                .map(|r| grams(r, n).iter().filter(|x| *x == g).count())
                .max()
                .unwrap_or(0);
            let m = in_cand.min(best_ref);
            if m == 0 {
                continue;
            }
            let num = if n == 1 { total_words } else { occurrences(&g[..n - 1], refs) };
            let info = (num as f64 / occurrences(g, refs) as f64).log2();
            weighted += info * m as f64;
        }
        score += weighted / cg.len().max(1) as f64;
    }
    let rbar = total_words as f64 / refs.len() as f64;
    let ratio = (c.len() as f64 / rbar).min(1.0);
    let beta = 0.5f64.ln() / 1.5f64.ln().powi(2);
    score * (beta * ratio.ln().powi(2)).exp()
}

#[test]
fn nist_matches_brute_force_on_six_tokens() {
    let cases = [
        ("a b c a b c", vec!["a b c d a b"]),
        ("the cat sat on the mat", vec!["the cat is on the mat", "there is a cat on the mat"]),
        ("x y", vec!["x y z x y z"]),
        ("one two three four five six", vec!["six five four three two one"]),
    ];
    for (c, rs) in cases {
        let ct = toks(c);
        let rt: Vec<TokenSequence> = rs.iter().map(|r| toks(r)).collect();
        let refs: Vec<&TokenSequence> = rt.iter().collect();
        let got = nist(&ct, &refs).unwrap();
        let want = nist_oracle(ct.tokens(), &rt.iter().map(|r| r.tokens().to_vec()).collect::<Vec<_>>());
        assert!((got - want).abs() < 1e-9, "{c}: {got} vs {want}");
    }
}

#[test]
fn nist_info_weights_by_hand() {
    // ref "a b a": count(a)=2, count(b)=1, 3 words, count(a b)=1, count(b a)=1, count(a b a)=1
    // cand "a b": unigram info log2(3/2)+log2(3), bigram info log2(2/1)
    let b = nist_breakdown(&toks("a b"), &[&toks("a b a")]).unwrap();
    let u = (1.5f64).log2() + 3f64.log2();
    assert!((b.order_scores[0] - u / 2.0).abs() < TOL);
    assert!((b.order_scores[1] - 1.0).abs() < TOL);
    assert_eq!(b.order_scores[2], 0.0);
    let bp = nist_brevity_factor(2, 3.0);
    assert!((bp - 0.5).abs() < TOL);
    assert!((b.score - (u / 2.0 + 1.0) * 0.5).abs() < TOL);
}

#[test]
fn rouge_by_hand() {
    // LCS("police killed the gunman", "police kill the gunman") = 3
    let r = rouge_l(&toks("police killed the gunman"), &toks("police kill the gunman"), false).unwrap();
    assert!((r.precision - 0.75).abs() < TOL);
    assert!((r.recall - 0.75).abs() < TOL);
    assert!((r.f - 0.75).abs() < TOL);
    let s = rouge_l(&toks("police killed the gunman"), &toks("police kill the gunman"), true).unwrap();
    assert!((s.f - 1.0).abs() < TOL);
}

#[test]
fn identity_and_disjoint() {
    let t = toks("EventManager acts as a publisher for EventListener");
    assert!((bleu4(&t, &[&t]).unwrap() - 1.0).abs() < TOL);
    assert!((rouge_l(&t, &t, true).unwrap().f - 1.0).abs() < TOL);
    let d = toks("completely unrelated words here now");
    assert_eq!(rouge_l(&t, &d, true).unwrap().f, 0.0);
    assert_eq!(nist(&t, &[&d]).unwrap(), 0.0);
}

#[test]
fn empty_inputs_are_errors() {
    let e = toks("");
    let t = toks("a");
    assert_eq!(rouge_l(&e, &t, false), Err(MetricError::EmptyInput("candidate")));
    assert_eq!(rouge_l(&t, &e, false), Err(MetricError::EmptyInput("reference")));
    assert!(nist(&e, &[&t]).is_err());
    assert!(corpus_bleu4(&[]).is_err());
}

fn pair(id: &str, group: &str, c: &str, r: &str) -> Pair {
    Pair {
        candidate_id: id.into(),
        reference_id: format!("{id}.ref"),
        group: group.into(),
        candidate: c.into(),
        references: vec![r.into()],
    }
}

#[test]
fn ten_pairs_recount_naively() {
    let texts = [
        ("The cat sat on the mat.", "A cat sat on the mat."),
        ("It is a public class.", "It is a public abstract class."),
        ("Dialog acts as an abstract creator.", "Dialog is an abstract creator for buttons."),
        ("No methods call render.", "render is not called."),
        ("The only method of X is run.", "X has only the run method."),
        ("Visitor for element shapes.", "It visits shapes."),
        ("BusAdapter overrides drive.", "BusAdapter adapts Bus to Car by overriding drive."),
        ("Two methods call notify.", "notify is called by two methods."),
        ("It creates the Button and CheckBox products.", "It creates buttons and check boxes."),
        ("Registry is reached through getInstance.", "Registry is a singleton."),
    ];
    let pairs: Vec<Pair> = texts
        .iter()
        .enumerate()
        .map(|(i, (c, r))| pair(&format!("p{i}"), if i < 5 { "alpha" } else { "beta" }, c, r))
        .collect();
    let report = score_corpus(&pairs, BleuMode::Sentence, true);
    assert_eq!(report.per_pair.len(), 10);
    assert!(report.failed.is_empty());
    let mut b = 0.0;
    let mut n = 0.0;
    let mut r = 0.0;
    for p in &pairs {
        let c = toks(&p.candidate);
        let rf = toks(&p.references[0]);
        b += bleu4(&c, &[&rf]).unwrap();
        n += nist(&c, &[&rf]).unwrap();
        r += rouge_l(&c, &rf, true).unwrap().f;
    }
    assert!((report.overall.bleu4 - b / 10.0).abs() < 1e-12);
    assert!((report.overall.nist - n / 10.0).abs() < 1e-12);
    assert!((report.overall.rouge_l_f - r / 10.0).abs() < 1e-12);
    assert_eq!(report.groups.len(), 2);
    assert_eq!(report.groups[0].group, "alpha");
    assert_eq!(report.groups[0].scores.count, 5);
    assert_eq!(report.per_pair[3].reference_id, "p3.ref");
    let g = (report.groups[0].scores.nist + report.groups[1].scores.nist) / 2.0;
    assert!((report.overall.nist - g).abs() < 1e-12);
    let table = report.to_table();
    assert!(table.lines().next().unwrap().starts_with("Project"));
    assert!(table.contains("FrugalScore"));
    assert!(table.contains("Total (avg)"));
    assert!(table.contains("n/a"));
}

#[test]
fn failed_pairs_are_excluded() {
    let pairs = vec![pair("a", "g", "x y z", "x y z"), pair("b", "g", "", "x y z"), pair("c", "g", "x", "")];
    let report = score_corpus(&pairs, BleuMode::Sentence, false);
    assert_eq!(report.per_pair.len(), 1);
    assert_eq!(report.failed.len(), 2);
    assert_eq!(report.overall.count, 1);
    assert!((report.overall.rouge_l_f - 1.0).abs() < TOL);
    assert!(report.to_table().contains("2 pair(s) could not be scored"));
}

#[test]
fn corpus_mode_uses_pooled_bleu() {
    let pairs = vec![pair("a", "g", "the cat sat", "the cat sat down"), pair("b", "g", "a dog ran off", "a dog ran off")];
    let report = score_corpus(&pairs, BleuMode::Corpus, false);
    let expected = (1.0f64 - 8.0 / 7.0).exp() * (0.5f64).powf(0.25);
    assert!((report.overall.bleu4 - expected).abs() < TOL);
    assert!((report.groups[0].scores.bleu4 - expected).abs() < TOL);
}
