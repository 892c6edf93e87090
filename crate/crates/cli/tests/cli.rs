use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use patsum::{execute, walk_corpus, OutputFormat, RunConfig};
use patsum_core::summary::SummaryDocument;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_patsum"))
}

/// Recursive `.java` count with plain `read_dir`.
fn count_java(dir: &Path) -> usize {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            if p.is_dir() {
                count_java(&p)
            } else {
                usize::from(p.extension().is_some_and(|e| e == "java"))
            }
        })
        .sum()
}

#[test]
fn walker_keeps_java_only() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["A.java", "B.java", "C.java", "README.md"] {
        fs::write(dir.path().join(name), "class X {}").unwrap();
    }
    let w = walk_corpus(dir.path()).unwrap();
    assert_eq!(w.files.len(), 3);
    assert_eq!(w.skipped, 1);
    let names: Vec<_> = w.files.iter().map(|f| f.path.file_name().unwrap().to_owned()).collect();
    assert_eq!(names, ["A.java", "B.java", "C.java"]);
}

#[test]
fn walker_on_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let w = walk_corpus(dir.path()).unwrap();
    assert!(w.files.is_empty());
    assert_eq!(w.skipped, 0);
}

#[test]
fn walker_count_matches_recount() {
    for sub in ["corpus", "positive", "negative", ""] {
        let root = fixtures().join(sub);
        let w = walk_corpus(&root).unwrap();
        assert_eq!(w.files.len(), count_java(&root), "{sub}");
        assert!(w.files.windows(2).all(|p| p[0].path < p[1].path));
    }
}

#[test]
fn first_block_is_the_observer_golden() {
    let out = tempfile::tempdir().unwrap();
    let path = out.path().join("summaries.txt");
    let status = bin()
        .args(["--input", fixtures().join("corpus/observer").to_str().unwrap()])
        .args(["--out", path.to_str().unwrap(), "--compat-table1"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let first = text.split("\n\n").next().unwrap().trim();
    let golden = fs::read_to_string(fixtures().join("golden/EmailNotificationListener.txt")).unwrap();
    assert_eq!(first, golden.trim());
}

#[test]
fn missing_input_exits_two_without_output() {
    let out = tempfile::tempdir().unwrap();
    let path = out.path().join("s.txt");
    let status = bin()
        .args(["--input", "/definitely/not/here", "--out", path.to_str().unwrap(), "--emit-ir"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    assert_eq!(fs::read_dir(out.path()).unwrap().count(), 0);
}

#[test]
fn unknown_pattern_is_a_config_error() {
    let out = tempfile::tempdir().unwrap();
    let status = bin()
        .args(["--input", fixtures().join("corpus/adapter").to_str().unwrap()])
        .args(["--out", out.path().join("s.txt").to_str().unwrap(), "--patterns", "observer,bridge"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn parse_errors_skip_or_fail() {
    let src = tempfile::tempdir().unwrap();
    fs::write(src.path().join("Good.java"), "public class Good { void run() {} }").unwrap();
    fs::write(src.path().join("Bad.java"), "public class Bad { void run( }").unwrap();
    let out = tempfile::tempdir().unwrap();
    let path = out.path().join("s.txt");
    let lenient = bin()
        .args(["--input", src.path().to_str().unwrap(), "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(lenient.status.code(), Some(0));
    assert!(lenient.stdout.is_empty());
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("Bad.java"));
    assert!(fs::read_to_string(&path).unwrap().starts_with("Good does not have any design pattern."));

    let strict_out = out.path().join("strict.txt");
    let strict = bin()
        .args(["--input", src.path().to_str().unwrap(), "--out", strict_out.to_str().unwrap(), "--strict"])
        .status()
        .unwrap();
    assert_eq!(strict.code(), Some(1));
    assert!(!strict_out.exists());
}

fn config(input: &Path, out: &Path) -> RunConfig {
    RunConfig::new(input, out.join("summaries.txt"))
}

#[test]
fn identical_references_score_one() {
    let input = fixtures().join("corpus/factory_method");
    let out = tempfile::tempdir().unwrap();
    let first = execute(&config(&input, out.path())).unwrap();
    let refs = out.path().join("refs");
    fs::create_dir(&refs).unwrap();
    for s in &first.summaries {
        fs::write(refs.join(format!("{}.txt", s.class_name)), s.text()).unwrap();
    }
    let mut cfg = config(&input, out.path());
    cfg.references = Some(refs);
    let second = execute(&cfg).unwrap();
    let report = second.metrics.unwrap();
    assert_eq!(report.per_pair.len(), first.summaries.len());
    for p in &report.per_pair {
        assert!((p.bleu4 - 1.0).abs() < 1e-9, "{}", p.candidate_id);
        assert!((p.rouge_l.f - 1.0).abs() < 1e-12);
    }
    assert!((report.overall.bleu4 - 1.0).abs() < 1e-9);
    let table = fs::read_to_string(out.path().join("metrics.txt")).unwrap();
    assert!(table.contains("factory_method"));
    assert!(table.contains("1.0000"));
    let json: serde_json::Value = serde_json::from_slice(&fs::read(out.path().join("metrics.json")).unwrap()).unwrap();
    assert!(json["frugal_score"].is_null());
}

#[test]
fn json_map_references() {
    let input = fixtures().join("corpus/adapter");
    let out = tempfile::tempdir().unwrap();
    let refs = out.path().join("refs.json");
    fs::write(&refs, r#"{"adapter.BusAdapter": "BusAdapter adapts a bus to the car interface."}"#).unwrap();
    let mut cfg = config(&input, out.path());
    cfg.references = Some(refs);
    let report = execute(&cfg).unwrap().metrics.unwrap();
    assert_eq!(report.per_pair.len(), 1);
    assert_eq!(report.per_pair[0].reference_id, "adapter.BusAdapter");
}

#[test]
fn runs_are_byte_identical() {
    let input = fixtures().join("corpus");
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, jobs) in [(&a, 1), (&b, 4)] {
        let mut cfg = config(&input, dir.path());
        cfg.emit_ir = true;
        cfg.jobs = jobs;
        execute(&cfg).unwrap();
    }
    for name in ["summaries.txt", "ir.json"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
    let names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 2, "stray files: {names:?}");
}

#[test]
fn json_output_is_a_summary_array() {
    let out = tempfile::tempdir().unwrap();
    let mut cfg = config(&fixtures().join("corpus/visitor"), out.path());
    cfg.output_format = OutputFormat::Json;
    execute(&cfg).unwrap();
    let docs: Vec<SummaryDocument> =
        serde_json::from_slice(&fs::read(out.path().join("summaries.txt")).unwrap()).unwrap();
    assert_eq!(docs[0].class_name, "ComputerPart");
    assert!(docs.iter().all(|d| !d.trace.is_empty()));
}

#[test]
fn pattern_filter_restricts_ir() {
    let out = tempfile::tempdir().unwrap();
    let mut cfg = config(&fixtures().join("corpus"), out.path());
    cfg.patterns_filter = Some(vec!["adapter".parse().unwrap()]);
    let run = execute(&cfg).unwrap();
    assert_eq!(run.document.patterns.len(), 1);
    assert!(run.summaries[0].qualified_name.starts_with("adapter."));
    let bus_adapter = run.summaries.iter().find(|s| s.class_name == "BusAdapter").unwrap();
    assert!(bus_adapter.text().starts_with("BusAdapter acts as an Adapter"));
    let listener = run.summaries.iter().find(|s| s.class_name == "EmailNotificationListener").unwrap();
    assert!(listener.text().contains("does not have any design pattern"));
}

#[test]
fn flags_override_config_file() {
    let out = tempfile::tempdir().unwrap();
    let cfg_path = out.path().join("patsum.toml");
    let input = fixtures().join("corpus/observer");
    fs::write(
        &cfg_path,
        format!(
            "input = {:?}\nout = {:?}\nformat = \"json\"\ncompat-table1 = true\npatterns = [\"observer\"]\n",
            input.to_str().unwrap(),
            out.path().join("from-config.json").to_str().unwrap()
        ),
    )
    .unwrap();
    let flag_out = out.path().join("from-flag.txt");
    let status = bin()
        .args(["--config", cfg_path.to_str().unwrap(), "--out", flag_out.to_str().unwrap(), "--format", "text"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(!out.path().join("from-config.json").exists());
    let text = fs::read_to_string(flag_out).unwrap();
    assert!(text.contains("The only method of EmailNotificationListener is void update."));

    fs::write(&cfg_path, "inptu = \"x\"\n").unwrap();
    let bad = bin().args(["--config", cfg_path.to_str().unwrap()]).status().unwrap();
    assert_eq!(bad.code(), Some(2));
}
