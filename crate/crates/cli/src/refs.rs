use std::collections::BTreeMap;
use std::path::Path;

use walkdir::WalkDir;

/// Reference summaries keyed by class name, simple or qualified.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct References(BTreeMap<String, String>);

impl References {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    /// Reference for a class: qualified name first, then simple name.
    pub fn lookup<'a>(&'a self, qualified: &'a str, simple: &'a str) -> Option<(&'a str, &'a str)> {
        [qualified, simple]
            .into_iter()
            .find_map(|k| self.0.get_key_value(k).map(|(k, v)| (k.as_str(), v.as_str())))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, String)> for References {
    fn from_iter<I: IntoIterator<Item = (String, String)>>(iter: I) -> Self {
        References(iter.into_iter().collect())
    }
}

/// Reads `<Class>.txt` files below a directory, or a JSON object mapping
/// class names to text.
pub fn load_references(path: &Path) -> anyhow::Result<References> {
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let map: BTreeMap<String, String> = serde_json::from_str(&text)?;
        return Ok(References(map));
    }
    let mut map = BTreeMap::new();
    for entry in WalkDir::new(path).sort_by_file_name() {
        let entry = entry?;
        let p = entry.path();
        if entry.file_type().is_file() && p.extension().is_some_and(|e| e == "txt") {
            let Some(stem) = p.file_stem() else { continue };
            map.insert(stem.to_string_lossy().into_owned(), std::fs::read_to_string(p)?.trim().to_string());
        }
    }
    Ok(References(map))
}
