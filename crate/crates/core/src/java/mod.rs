//! Java front end: tokenizer, parser and per-file feature extraction.

pub mod ast;
mod features;
mod lexer;
mod parser;

use std::path::PathBuf;

pub use ast::CompilationUnit;
pub use features::*;
pub use lexer::{tokenize, Tok, Token};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseFailure {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

impl ParseFailure {
    pub fn new(line: u32, column: u32, message: impl Into<String>) -> Self {
        ParseFailure {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: PathBuf,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<PathBuf>, text: impl Into<String>) -> Self {
        SourceFile {
            path: path.into(),
            text: text.into(),
        }
    }
}

/// Parses one file. Empty or whitespace-only text is rejected.
pub fn parse_file(source: &SourceFile) -> Result<CompilationUnit, ParseFailure> {
    if source.text.trim().is_empty() {
        return Err(ParseFailure::new(1, 1, "empty source file"));
    }
    parser::parse_compilation_unit(&source.text)
}

/// Package and imports of a parsed unit, as the `SourceFile` view exposes them.
pub fn package_name(unit: &CompilationUnit) -> &str {
    unit.package.as_deref().unwrap_or("")
}

pub fn import_paths(unit: &CompilationUnit) -> Vec<String> {
    unit.imports
        .iter()
        .map(|i| if i.wildcard { format!("{}.*", i.path) } else { i.path.clone() })
        .collect()
}
