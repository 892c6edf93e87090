use serde::{Deserialize, Serialize};

/// Lowercased word tokens, never empty strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TokenSequence(Vec<String>);

impl TokenSequence {
    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: AsRef<str>> FromIterator<S> for TokenSequence {
    /// Takes already-split words; empty ones are dropped and the rest lowercased.
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        TokenSequence(
            iter.into_iter()
                .map(|s| s.as_ref().to_lowercase())
                .filter(|s| !s.is_empty())
                .collect(),
        )
    }
}

/// Splits on anything that is not a letter or digit; punctuation is dropped.
pub fn tokenize(text: &str) -> TokenSequence {
    text.split(|c: char| !c.is_alphanumeric()).collect()
}
