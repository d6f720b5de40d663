use std::fmt;

use super::GroupError;

/// One generator or inverse generator in a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub label: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(label: impl Into<String>, inverse: bool) -> Self {
        Self { label: label.into(), inverse }
    }

    pub fn inverted(&self) -> Self {
        Self { label: self.label.clone(), inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

/// A word over labeled generators, read left to right.
///
/// Text form: space-separated letters, each `label` or `label^-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Labels are nonempty runs of ASCII letters, digits, `_` and `.`.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letter(label: impl Into<String>) -> Self {
        Self { letters: vec![Letter::new(label, false)] }
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (label, inverse) = match token.split_once('^') {
                None => (token, false),
                Some((label, "-1")) => (label, true),
                Some(_) => {
                    return Err(GroupError::InvalidWord(format!(
                        "bad exponent in `{token}` (only `^-1` is allowed)"
                    )))
                }
            };
            if !is_valid_label(label) {
                return Err(GroupError::InvalidWord(format!("bad label in `{token}`")));
            }
            letters.push(Letter::new(label, inverse));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverted).collect() }
    }

    /// `self^k`; negative powers repeat the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        Word { letters }
    }

    /// Cancels adjacent `x x^-1` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last().is_some_and(|prev| prev.label == l.label && prev.inverse != l.inverse) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word { letters: out }
    }

    /// Replaces every letter by a word (inverted for inverse letters).
    pub fn substitute<F>(&self, mut lookup: F) -> Result<Word, GroupError>
    where
        F: FnMut(&str) -> Option<Word>,
    {
        let mut letters = Vec::new();
        for l in &self.letters {
            let w = lookup(&l.label).ok_or_else(|| GroupError::UnknownLabel(l.label.clone()))?;
            let w = if l.inverse { w.inverse() } else { w };
            letters.extend(w.letters);
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
