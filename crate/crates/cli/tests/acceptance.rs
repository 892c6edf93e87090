//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits non-zero
//! when any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;
#[path = "../../core/tests/common/gen_ir.rs"]
mod gen_ir;
#[path = "../../core/tests/common/mutations.rs"]
mod mutations;

use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use patsum::{execute, RunConfig};
use patsum_core::ir::{deserialise, serialise, IrDocument};
use patsum_core::java::SourceFile;
use patsum_core::patterns::{PatternKind, Role};
use patsum_core::pipeline::{analyse, ir_file};
use patsum_core::summary::{article, is_well_formed, summarise, PlanKind, SummaryDocument};
use patsum_metrics::{bleu4, lcs_len, nist, nist_brevity_factor, rouge_l, score_corpus, tokenize, BleuMode, Pair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

const GOLDEN_BUDGET: Duration = Duration::from_secs(5);
const THROUGHPUT_BUDGET: Duration = Duration::from_secs(60);
const SCORE_TOL: f64 = 1e-9;
const BREVITY_TOL: f64 = 1e-9;
const LCS_PAIRS: usize = 1000;
const LCS_MAX_LEN: usize = 8;
const IR_DOCS: usize = 500;
const SYNTHETIC_FILES: usize = 1000;
const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn normalise(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn run_project(root: &Path, tune: impl FnOnce(&mut RunConfig)) -> Result<patsum::RunSummary, String> {
    let out = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut cfg = RunConfig::new(root, out.path().join("summaries.txt"));
    tune(&mut cfg);
    execute(&cfg).map_err(|e| format!("{}: {e}", root.display()))
}

#[derive(Deserialize)]
struct Manifest {
    golden: Vec<Golden>,
}

#[derive(Deserialize)]
struct Golden {
    class: String,
    project: String,
    #[serde(default)]
    compat_table1: bool,
    #[serde(default)]
    compat_table3: bool,
}

fn ac1_golden_summaries() -> Outcome {
    let started = Instant::now();
    let golden_dir = common::fixtures().join("golden");
    let manifest: Manifest = toml::from_str(
        &std::fs::read_to_string(golden_dir.join("manifest.toml")).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    for g in &manifest.golden {
        let run = run_project(&common::fixtures().join("corpus").join(&g.project), |c| {
            c.compat_table1 = g.compat_table1;
            c.compat_table3 = g.compat_table3;
        })?;
        let got = run
            .summaries
            .iter()
            .find(|s| s.qualified_name == g.class)
            .ok_or_else(|| format!("no summary for {}", g.class))?;
        let simple = g.class.rsplit('.').next().unwrap_or(&g.class);
        let expected = std::fs::read_to_string(golden_dir.join(format!("{simple}.txt"))).map_err(|e| e.to_string())?;
        ensure(normalise(&got.text()) == normalise(&expected), || {
            format!("{}:\n  got      {}\n  expected {}", g.class, got.text(), normalise(&expected))
        })?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < GOLDEN_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} goldens in {elapsed:.2?}", manifest.golden.len()))
}

fn has_role(doc: &IrDocument, kind: PatternKind, class: &str, role: Role) -> bool {
    doc.patterns.iter().any(|p| p.kind == kind && p.role_of(class) == Some(role))
}

fn ac2_detection_matrix() -> Outcome {
    let doc = run_project(&common::fixtures().join("corpus"), |_| {})?.document;
    let found: Vec<(PatternKind, &str)> = doc.patterns.iter().map(|p| (p.kind, p.principal())).collect();
    let expected = [
        (PatternKind::AbstractFactory, "abstract_factory.GUIFactory"),
        (PatternKind::Adapter, "adapter.BusAdapter"),
        (PatternKind::FactoryMethod, "factory_method.Dialog"),
        (PatternKind::Memento, "memento.Attribute"),
        (PatternKind::Observer, "observer.EventListener"),
        (PatternKind::Visitor, "visitor.ComputerPart"),
    ];
    ensure(found == expected, || format!("matrix {found:?}"))?;
    let roles = [
        (PatternKind::Observer, "observer.EmailNotificationListener", Role::ConcreteObserver),
        (PatternKind::AbstractFactory, "abstract_factory.GUIFactory", Role::AbstractFactory),
        (PatternKind::FactoryMethod, "factory_method.Dialog", Role::Creator),
        (PatternKind::FactoryMethod, "factory_method.HtmlDialog", Role::ConcreteCreator),
        (PatternKind::Adapter, "adapter.BusAdapter", Role::Adapter),
        (PatternKind::Visitor, "visitor.ComputerPart", Role::Element),
        (PatternKind::Memento, "memento.DefaultINodeAttributesProvider", Role::Caretaker),
    ];
    for (kind, class, role) in roles {
        ensure(has_role(&doc, kind, class, role), || format!("{class} is not {role} in {kind}"))?;
    }

    let negatives = common::fixtures().join("negative");
    let mut dirs: Vec<_> = std::fs::read_dir(&negatives)
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    dirs.sort();
    ensure(dirs.len() == 10, || format!("{} negative fixtures", dirs.len()))?;
    for d in &dirs {
        let doc = common::load(d);
        ensure(doc.patterns.is_empty(), || {
            format!("false positive in {}: {:?}", d.display(), common::describe(&doc))
        })?;
    }

    for m in mutations::MUTATIONS {
        let root = common::fixtures().join(m.project);
        let detected = |doc: &IrDocument| doc.patterns.iter().any(|p| p.kind == m.kind);
        ensure(detected(&common::load(&root)), || format!("{} not detected unmutated", m.project))?;
        let mut files = common::sources(&root);
        for &(file, from, to) in m.edits {
            let f = files
                .iter_mut()
                .find(|f| f.path.ends_with(file))
                .ok_or_else(|| format!("no {file}"))?;
            ensure(f.text.contains(from), || format!("{file} lacks {from:?}"))?;
            *f = SourceFile::new(f.path.clone(), f.text.replacen(from, to, 1));
        }
        let after = common::load_sources(&root, &files);
        ensure(!detected(&after), || format!("{} survived {:?}", m.kind, m.edits))?;
    }
    Ok(format!(
        "{} instances, {} negatives clean, {} mutations killed",
        found.len(),
        dirs.len(),
        mutations::MUTATIONS.len()
    ))
}

/// Longest common subsequence by trying every subsequence of `a`.
fn lcs_oracle(a: &[u8], b: &[u8]) -> usize {
    let is_sub = |s: &[u8]| {
        let mut it = b.iter();
        s.iter().all(|x| it.any(|y| y == x))
    };
    (0u32..(1 << a.len()))
        .map(|mask| (0..a.len()).filter(|i| mask & (1 << i) != 0).map(|i| a[i]).collect::<Vec<_>>())
        .filter(|s| is_sub(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn all_fixture_summaries() -> Vec<SummaryDocument> {
    let mut out = Vec::new();
    for group in ["corpus", "positive", "negative"] {
        let root = common::fixtures().join(group);
        let mut dirs: Vec<_> = std::fs::read_dir(&root).unwrap().map(|e| e.unwrap().path()).collect();
        dirs.sort();
        for d in dirs {
            out.extend(summarise(&common::load(&d)));
        }
    }
    out
}

fn ac3_metric_correctness() -> Outcome {
    let t = tokenize("EmailNotificationListener acts as a concrete observer inside the Observer Pattern.");
    let b = bleu4(&t, &[&t]).map_err(|e| e.to_string())?;
    ensure((b - 1.0).abs() <= SCORE_TOL, || format!("identity BLEU {b}"))?;
    let r = rouge_l(&t, &t, true).map_err(|e| e.to_string())?;
    ensure(r.f == 1.0, || format!("identity ROUGE-L {r:?}"))?;

    let d = tokenize("completely unrelated words appear here");
    let r = rouge_l(&t, &d, true).map_err(|e| e.to_string())?;
    ensure(r.f == 0.0 && r.precision == 0.0 && r.recall == 0.0, || format!("disjoint ROUGE-L {r:?}"))?;
    let n = nist(&t, &[&d]).map_err(|e| e.to_string())?;
    ensure(n == 0.0, || format!("disjoint NIST {n}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..LCS_PAIRS {
        let mut seq = || {
            let len = rng.gen_range(0..=LCS_MAX_LEN);
            (0..len).map(|_| rng.gen_range(0..5u8)).collect::<Vec<_>>()
        };
        let (a, b) = (seq(), seq());
        let (dp, brute) = (lcs_len(&a, &b), lcs_oracle(&a, &b));
        ensure(dp == brute, || format!("pair {i} {a:?} {b:?}: dp {dp} oracle {brute}"))?;
    }

    for r in [3usize, 9, 30, 300] {
        let f = nist_brevity_factor(r * 2 / 3, r as f64);
        ensure((f - 0.5).abs() <= BREVITY_TOL, || format!("brevity factor {f} at {}/{r}", r * 2 / 3))?;
    }

    let summaries = all_fixture_summaries();
    let pairs: Vec<Pair> = summaries
        .iter()
        .map(|s| Pair {
            candidate_id: s.qualified_name.clone(),
            reference_id: s.qualified_name.clone(),
            group: "fixtures".into(),
            candidate: s.text(),
            references: vec![s.text()],
        })
        .collect();
    let report = score_corpus(&pairs, BleuMode::Sentence, true);
    ensure(report.failed.is_empty(), || format!("{} pairs failed", report.failed.len()))?;
    for p in &report.per_pair {
        ensure((p.bleu4 - 1.0).abs() <= SCORE_TOL && (p.rouge_l.f - 1.0).abs() <= SCORE_TOL, || {
            format!("self-score of {}: BLEU {} ROUGE-L {}", p.candidate_id, p.bleu4, p.rouge_l.f)
        })?;
    }
    Ok(format!(
        "identity/disjoint ok, {LCS_PAIRS} LCS pairs, brevity 0.5, {} self-scored summaries",
        report.per_pair.len()
    ))
}

fn ac4_ir_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..IR_DOCS {
        let doc = gen_ir::document(&mut rng);
        let bytes = serialise(&doc);
        let back = deserialise(&bytes).map_err(|e| format!("doc {i}: {e}"))?;
        ensure(back == doc, || format!("doc {i} changed in round trip"))?;
        ensure(serialise(&back) == bytes, || format!("doc {i} reserialises differently"))?;
        ensure(serialise(&doc) == bytes, || format!("doc {i} not byte-stable"))?;
    }
    let fixture = common::load(&common::fixtures().join("corpus"));
    ensure(serialise(&fixture) == serialise(&common::load(&common::fixtures().join("corpus"))), || {
        "fixture IR differs between runs".into()
    })?;
    Ok(format!("{IR_DOCS} random documents"))
}

fn synthetic_class(methods: usize) -> IrDocument {
    let mut src = String::from("package s;\npublic class Widget {\n");
    for i in 0..methods {
        let body = if i == 0 { "v".to_string() } else { format!("m{}(v)", i - 1) };
        let _ = writeln!(src, "    public int m{i}(int v) {{ return {body}; }}");
    }
    src.push_str("}\n");
    let file = SourceFile::new("s/Widget.java", src);
    analyse("s", vec![ir_file(&file, None).expect("synthetic source parses")], None).expect("links")
}

fn callers_of_t(k: usize) -> IrDocument {
    let mut src = String::from("class A {\n    void t() {}\n");
    for i in 0..k {
        let _ = writeln!(src, "    void c{i}() {{ t(); }}");
    }
    src.push_str("}\n");
    let file = SourceFile::new("A.java", src);
    analyse("p", vec![ir_file(&file, None).expect("parses")], None).expect("links")
}

fn grammar_errors(doc: &IrDocument) -> Vec<String> {
    let ids: Vec<String> = doc
        .classes()
        .flat_map(|c| c.methods.iter().map(|m| m.method_name.clone()).chain([c.class_name.clone()]))
        .collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    summarise(doc)
        .iter()
        .flat_map(|s| s.sentences.clone())
        .filter(|s| !is_well_formed(s, &ids))
        .collect()
}

fn ac5_realiser_grammar() -> Outcome {
    let mut checked = 0;
    for group in ["corpus", "positive", "negative"] {
        for entry in std::fs::read_dir(common::fixtures().join(group)).map_err(|e| e.to_string())? {
            let doc = common::load(&entry.map_err(|e| e.to_string())?.path());
            let bad = grammar_errors(&doc);
            ensure(bad.is_empty(), || format!("ill-formed: {bad:?}"))?;
            checked += summarise(&doc).len();
        }
    }
    const NUMBER: [&str; 11] = ["", "", "Two", "Three", "Four", "Five", "Six", "Seven", "Eight", "Nine", "Ten"];
    for n in 0..=10 {
        let doc = synthetic_class(n);
        let bad = grammar_errors(&doc);
        ensure(bad.is_empty(), || format!("ill-formed with {n} methods: {bad:?}"))?;
        let s = &summarise(&doc)[0];
        let enumeration = s.sentences.iter().zip(&s.trace).find(|(_, p)| p.kind == PlanKind::MethodEnum);
        match (n, enumeration) {
            (0, None) => {}
            (1, Some((e, _))) => ensure(e.starts_with("The only method of Widget is "), || e.clone())?,
            (n, Some((e, _))) if n > 1 => {
                ensure(e.starts_with(&format!("The {n} methods of Widget are ")), || e.clone())?
            }
            _ => return Err(format!("method enumeration for {n} methods: {enumeration:?}")),
        }

        let doc = callers_of_t(n);
        ensure(grammar_errors(&doc).is_empty(), || format!("ill-formed with {n} callers"))?;
        let text = summarise(&doc)[0].text();
        let expected = match n {
            0 => "No methods call t and".to_string(),
            1 => "Only one method (c0 method of class A) calls t and".to_string(),
            n => format!("{} methods (c0 method of class A", NUMBER[n]),
        };
        ensure(text.contains(&expected), || format!("{n} callers: {text}"))?;
        if n > 1 {
            ensure(text.contains(&format!("c{} method of class A) call t and", n - 1)), || text.clone())?;
        }
        checked += 2;
    }

    let vocabulary = [
        ("abstract factory", "an"),
        ("concrete factory", "a"),
        ("abstract product", "an"),
        ("concrete product", "a"),
        ("Adapter", "an"),
        ("adaptee", "an"),
        ("target", "a"),
        ("component", "a"),
        ("decorator", "a"),
        ("facade", "a"),
        ("subsystem", "a"),
        ("abstract creator", "an"),
        ("concrete creator", "a"),
        ("product", "a"),
        ("originator", "an"),
        ("memento", "a"),
        ("caretaker", "a"),
        ("subscriber", "a"),
        ("observer", "an"),
        ("publisher", "a"),
        ("singleton", "a"),
        ("element", "an"),
        ("visitor", "a"),
        ("interface", "an"),
        ("public class", "a"),
    ];
    for (word, a) in vocabulary {
        ensure(article(word) == a, || format!("article for {word:?} is {:?}", article(word)))?;
    }
    let all: String = summarise(&common::load(&common::fixtures().join("corpus")))
        .iter()
        .map(|s| s.text() + " ")
        .collect();
    for phrase in ["acts as an abstract factory", "acts as a caretaker for memento", "acts as an Adapter"] {
        ensure(all.contains(phrase), || format!("missing {phrase:?}"))?;
    }
    Ok(format!("{checked} summaries checked, {} article cases", vocabulary.len()))
}

/// Writes `n` Java files: interface families, subclasses, fields and calls.
fn synthetic_corpus(root: &Path, n: usize, rng: &mut ChaCha8Rng) -> std::io::Result<()> {
    for i in 0..n {
        let pkg = format!("gen{}", i / 50);
        let dir = root.join(&pkg);
        std::fs::create_dir_all(&dir)?;
        let mut src = format!("package {pkg};\n\nimport java.util.List;\nimport java.util.ArrayList;\n\n");
        let name = format!("Type{i}");
        if i % 10 == 0 {
            let _ = writeln!(src, "public interface {name} {{\n    void handle(String event);\n    int size();\n}}");
        } else {
            let base = i - i % 10;
            let parent = if i % 10 > 1 && rng.gen_bool(0.3) {
                format!(" extends Type{}", i - 1)
            } else {
                String::new()
            };
            let _ = writeln!(src, "public class {name}{parent} implements Type{base} {{");
            let _ = writeln!(src, "    private final List<Type{base}> peers = new ArrayList<>();");
            let _ = writeln!(src, "    private int count;\n");
            let _ = writeln!(src, "    public {name}(int start) {{\n        this.count = start;\n    }}\n");
            let _ = writeln!(src, "    @Override\n    public void handle(String event) {{");
            let _ = writeln!(src, "        for (Type{base} p : peers) {{\n            p.handle(event);\n        }}");
            let _ = writeln!(src, "        if (event.isEmpty()) {{\n            count = count + 1;\n        }}\n    }}\n");
            let _ = writeln!(src, "    @Override\n    public int size() {{\n        return helper(count) * {};\n    }}\n", rng.gen_range(1..9));
            let _ = writeln!(src, "    private int helper(int v) {{\n        int w = v;\n        return w;\n    }}\n");
            let _ = writeln!(src, "    public void add(Type{base} p) {{\n        peers.add(p);\n    }}\n}}");
        }
        std::fs::write(dir.join(format!("{name}.java")), src)?;
    }
    Ok(())
}

fn ac6_throughput() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    synthetic_corpus(dir.path(), SYNTHETIC_FILES, &mut rng).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let sequential = run_project(dir.path(), |c| {
        c.jobs = 1;
        c.emit_ir = true;
    })?;
    let elapsed = started.elapsed();
    ensure(sequential.parse_failures == 0, || format!("{} parse failures", sequential.parse_failures))?;
    ensure(sequential.document.files.len() == SYNTHETIC_FILES, || {
        format!("{} files analysed", sequential.document.files.len())
    })?;
    ensure(elapsed < THROUGHPUT_BUDGET, || format!("single-threaded run took {elapsed:?}"))?;
    let parallel = run_project(dir.path(), |c| {
        c.jobs = 0;
        c.emit_ir = true;
    })?;
    ensure(parallel.rendered == sequential.rendered, || "summaries differ".into())?;
    ensure(serialise(&parallel.document) == serialise(&sequential.document), || "IR differs".into())?;
    Ok(format!(
        "{SYNTHETIC_FILES} files, {} summaries, single-threaded {elapsed:.2?}, parallel identical",
        sequential.summaries.len()
    ))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("AC1 golden summaries", ac1_golden_summaries),
        ("AC2 detection matrix, negatives, mutations", ac2_detection_matrix),
        ("AC3 metric correctness", ac3_metric_correctness),
        ("AC4 IR round trip", ac4_ir_round_trip),
        ("AC5 realiser grammar", ac5_realiser_grammar),
        ("AC6 throughput and parallel determinism", ac6_throughput),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("[PASS] {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("[FAIL] {name}: panicked");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
