//! Parse, link, detect: source files to an [`IrDocument`].

use std::path::Path;

use crate::graph::{build_graph, GraphError};
use crate::ir::{IrDocument, IrFile};
use crate::java::{extract_features, parse_file, ParseFailure, SourceFile};
use crate::patterns::{detect_all, PatternKind};

/// `/`-separated form of `path` relative to `root` (or as given).
pub fn relative_path(path: &Path, root: Option<&Path>) -> String {
    let rel = root.and_then(|r| path.strip_prefix(r).ok()).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

/// One file's IR entry, before cross-file linking.
pub fn ir_file(file: &SourceFile, root: Option<&Path>) -> Result<IrFile, ParseFailure> {
    let unit = parse_file(file)?;
    let classes = extract_features(&unit);
    Ok(IrFile::from_unit(relative_path(&file.path, root), &unit, classes))
}

/// Links the files and runs detection. `kinds` restricts the reported
/// pattern kinds.
pub fn analyse(project: &str, files: Vec<IrFile>, kinds: Option<&[PatternKind]>) -> Result<IrDocument, GraphError> {
    let graph = build_graph(files)?;
    let mut patterns = detect_all(&graph);
    if let Some(kinds) = kinds {
        patterns.retain(|p| kinds.contains(&p.kind));
    }
    let mut doc = IrDocument::new(project);
    doc.files = graph.into_files();
    doc.patterns = patterns;
    Ok(doc)
}
