use std::path::{Path, PathBuf};

use patsum_core::java::SourceFile;
use walkdir::WalkDir;

#[derive(Debug, thiserror::Error)]
#[error("cannot read {path}: {message}")]
pub struct WalkError {
    pub path: PathBuf,
    pub message: String,
}

#[derive(Debug, Default)]
pub struct Walk {
    /// `.java` files sorted by path.
    pub files: Vec<SourceFile>,
    /// Regular files that were not `.java`.
    pub skipped: usize,
}

fn is_java(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "java")
}

pub fn walk_corpus(root: &Path) -> Result<Walk, WalkError> {
    let mut walk = Walk::default();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| WalkError {
            path: e.path().map_or_else(|| root.to_path_buf(), Path::to_path_buf),
            message: e.to_string(),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        if !is_java(entry.path()) {
            walk.skipped += 1;
            continue;
        }
        let text = std::fs::read_to_string(entry.path()).map_err(|e| WalkError {
            path: entry.path().to_path_buf(),
            message: e.to_string(),
        })?;
        walk.files.push(SourceFile::new(entry.path(), text));
    }
    walk.files.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(walk)
}
