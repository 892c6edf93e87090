//! JSON intermediate representation.
//!
//! The document layout is documented in `docs/ir-schema.md`. Key order in the
//! output follows struct field order, so serialisation is byte-stable.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::java::{import_paths, package_name, ClassFeatureRecord, CompilationUnit};
use crate::patterns::PatternInstance;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrDocument {
    pub schema_version: String,
    pub project: String,
    pub files: Vec<IrFile>,
    pub patterns: Vec<PatternInstance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrFile {
    /// Path relative to the project root, `/`-separated.
    pub path: String,
    pub package: String,
    pub imports: Vec<String>,
    pub classes: Vec<ClassFeatureRecord>,
}

impl IrFile {
    pub fn from_unit(path: impl Into<String>, unit: &CompilationUnit, classes: Vec<ClassFeatureRecord>) -> Self {
        IrFile {
            path: path.into(),
            package: package_name(unit).to_string(),
            imports: import_paths(unit),
            classes,
        }
    }
}

impl IrDocument {
    pub fn new(project: impl Into<String>) -> Self {
        IrDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            project: project.into(),
            files: Vec::new(),
            patterns: Vec::new(),
        }
    }

    pub fn classes(&self) -> impl Iterator<Item = &ClassFeatureRecord> {
        self.files.iter().flat_map(|f| f.classes.iter())
    }

    pub fn class(&self, qualified_name: &str) -> Option<&ClassFeatureRecord> {
        self.classes().find(|c| c.qualified_name == qualified_name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("schema error at {path}: {message}")]
pub struct SchemaError {
    /// JSONPath-style location, `$` for the root.
    pub path: String,
    pub message: String,
}

impl SchemaError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        SchemaError {
            path: path.into(),
            message: message.into(),
        }
    }
}

/// Pretty JSON with 2-space indentation and a trailing newline.
pub fn serialise(doc: &IrDocument) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(doc).expect("IR documents always serialise");
    out.push(b'\n');
    out
}

pub fn deserialise(bytes: &[u8]) -> Result<IrDocument, SchemaError> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let doc: IrDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = match e.path().to_string().as_str() {
            "." => "$".to_string(),
            p => format!("$.{p}"),
        };
        SchemaError::new(path, e.inner().to_string())
    })?;
    validate(&doc)?;
    Ok(doc)
}

/// Semantic checks beyond the JSON shape.
pub fn validate(doc: &IrDocument) -> Result<(), SchemaError> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(SchemaError::new(
            "$.schema_version",
            format!("unsupported schema version {:?}, expected {SCHEMA_VERSION:?}", doc.schema_version),
        ));
    }
    let known: HashSet<&str> = doc.classes().map(|c| c.qualified_name.as_str()).collect();
    for (i, p) in doc.patterns.iter().enumerate() {
        if p.roles.is_empty() || p.roles.values().all(Vec::is_empty) {
            return Err(SchemaError::new(format!("$.patterns[{i}].roles"), "pattern instance binds no roles"));
        }
        let mut bound: BTreeMap<&str, &str> = BTreeMap::new();
        for (role, classes) in &p.roles {
            for class in classes {
                if !known.contains(class.as_str()) {
                    return Err(SchemaError::new(
                        format!("$.patterns[{i}].roles.{}", role.as_str()),
                        format!("role {} is bound to unknown class {class}", role.as_str()),
                    ));
                }
                if let Some(other) = bound.insert(class.as_str(), role.as_str()) {
                    if other != role.as_str() {
                        return Err(SchemaError::new(
                            format!("$.patterns[{i}].roles.{}", role.as_str()),
                            format!("class {class} is bound to both {other} and {}", role.as_str()),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
