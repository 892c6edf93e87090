#![allow(dead_code)]

use std::path::{Path, PathBuf};

use patsum_core::ir::IrDocument;
use patsum_core::java::SourceFile;
use patsum_core::pipeline::{analyse, ir_file};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn java_files(dir: &Path, out: &mut Vec<PathBuf>) {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    entries.sort();
    for p in entries {
        if p.is_dir() {
            java_files(&p, out);
        } else if p.extension().is_some_and(|x| x == "java") {
            out.push(p);
        }
    }
}

pub fn sources(root: &Path) -> Vec<SourceFile> {
    let mut paths = Vec::new();
    java_files(root, &mut paths);
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            SourceFile::new(p, text)
        })
        .collect()
}

pub fn load_sources(root: &Path, files: &[SourceFile]) -> IrDocument {
    let ir = files
        .iter()
        .map(|f| ir_file(f, Some(root)).unwrap_or_else(|e| panic!("{}: {e}", f.path.display())))
        .collect();
    analyse("fixture", ir, None).unwrap()
}

pub fn load(root: &Path) -> IrDocument {
    load_sources(root, &sources(root))
}

/// `kind principal role=[classes]` lines for quick comparison.
pub fn describe(doc: &IrDocument) -> Vec<String> {
    doc.patterns
        .iter()
        .map(|p| {
            let roles: Vec<String> = p
                .roles
                .iter()
                .map(|(r, cs)| format!("{r}=[{}]", cs.join(",")))
                .collect();
            format!("{} {}", p.kind, roles.join(" "))
        })
        .collect()
}
