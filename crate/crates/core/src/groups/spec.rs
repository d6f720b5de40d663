use std::collections::HashMap;

use super::{is_valid_label, GroupElement, GroupError, GroupKind, Word};
use crate::exact::Matrix;
use crate::scalar::Scalar;

/// A labeled generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<T> {
    pub label: String,
    pub element: GroupElement<T>,
}

/// A group model together with labeled generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec<T> {
    kind: GroupKind<T>,
    generators: Vec<Generator<T>>,
    inverses: Vec<GroupElement<T>>,
    index: HashMap<String, usize>,
}

impl<T: Scalar> GroupSpec<T> {
    pub fn new(kind: GroupKind<T>, generators: Vec<Generator<T>>) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptyGeneratingSet);
        }
        let mut index = HashMap::new();
        let mut inverses = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if !is_valid_label(&g.label) {
                return Err(GroupError::InvalidLabel(g.label.clone()));
            }
            if index.insert(g.label.clone(), i).is_some() {
                return Err(GroupError::DuplicateLabel(g.label.clone()));
            }
            kind.check(&g.element)?;
            if let GroupElement::Matrix(m) = &g.element {
                let det = m.determinant()?;
                if !det.abs().is_one() {
                    return Err(GroupError::NotUnimodular {
                        label: g.label.clone(),
                        determinant: det.to_string(),
                    });
                }
            }
            inverses.push(kind.invert(&g.element)?);
        }
        Ok(Self { kind, generators, inverses, index })
    }

    /// `Z^r ⋊_A Z` with the standard generators `t = (0, 1)` and
    /// `e1, …, er = (e_i, 0)`.
    pub fn split_extension(action: Matrix<T>) -> Result<Self, GroupError> {
        let kind = GroupKind::split_extension(action)?;
        let r = kind.dimension();
        let mut generators = vec![Generator {
            label: "t".into(),
            element: GroupElement::split(vec![T::zero(); r], 1),
        }];
        for i in 0..r {
            let mut v = vec![T::zero(); r];
            v[i] = T::one();
            generators.push(Generator { label: format!("e{}", i + 1), element: GroupElement::split(v, 0) });
        }
        Self::new(kind, generators)
    }

    /// Matrix group generated by labeled unimodular matrices.
    pub fn matrix_group(degree: usize, generators: Vec<(String, Matrix<T>)>) -> Result<Self, GroupError> {
        let generators = generators
            .into_iter()
            .map(|(label, m)| Generator { label, element: GroupElement::Matrix(m) })
            .collect();
        Self::new(GroupKind::MatrixGroup { degree }, generators)
    }

    pub fn kind(&self) -> &GroupKind<T> {
        &self.kind
    }

    pub fn generators(&self) -> &[Generator<T>] {
        &self.generators
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|g| g.label.as_str())
    }

    pub fn generator(&self, label: &str) -> Option<&GroupElement<T>> {
        self.index.get(label).map(|&i| &self.generators[i].element)
    }

    /// The split-extension action matrix, if any.
    pub fn action(&self) -> Option<&Matrix<T>> {
        match &self.kind {
            GroupKind::SplitExtension { action, .. } => Some(action),
            GroupKind::MatrixGroup { .. } => None,
        }
    }

    pub fn identity(&self) -> GroupElement<T> {
        self.kind.identity()
    }

    pub fn compose(&self, g: &GroupElement<T>, h: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        self.kind.compose(g, h)
    }

    pub fn invert(&self, g: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        self.kind.invert(g)
    }

    pub fn commutator(&self, g: &GroupElement<T>, h: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        self.kind.commutator(g, h)
    }

    /// Left-to-right product of the letters of `word`.
    pub fn evaluate_word(&self, word: &Word) -> Result<GroupElement<T>, GroupError> {
        let mut acc = self.identity();
        for l in word.letters() {
            let i = *self.index.get(&l.label).ok_or_else(|| GroupError::UnknownLabel(l.label.clone()))?;
            let g = if l.inverse { &self.inverses[i] } else { &self.generators[i].element };
            acc = self.kind.compose(&acc, g)?;
        }
        Ok(acc)
    }

    /// The same group presented by the elements of `set`, under the set's labels.
    pub fn with_generating_set(&self, set: &GeneratingSet) -> Result<Self, GroupError> {
        let generators = set
            .entries()
            .iter()
            .map(|(label, word)| Ok(Generator { label: label.clone(), element: self.evaluate_word(word)? }))
            .collect::<Result<Vec<_>, GroupError>>()?;
        Self::new(self.kind.clone(), generators)
    }

    /// The same group with different labeled generator elements.
    pub fn with_generators(&self, generators: Vec<Generator<T>>) -> Result<Self, GroupError> {
        Self::new(self.kind.clone(), generators)
    }
}

/// Labeled words over the generators of a [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    entries: Vec<(String, Word)>,
}

impl GeneratingSet {
    pub fn new(entries: Vec<(String, Word)>) -> Result<Self, GroupError> {
        if entries.is_empty() {
            return Err(GroupError::EmptyGeneratingSet);
        }
        let mut seen = std::collections::HashSet::new();
        for (label, _) in &entries {
            if !is_valid_label(label) {
                return Err(GroupError::InvalidLabel(label.clone()));
            }
            if !seen.insert(label.as_str()) {
                return Err(GroupError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { entries })
    }

    /// Each generator of `spec` as a one-letter word under its own label.
    pub fn standard<T: Scalar>(spec: &GroupSpec<T>) -> Self {
        Self {
            entries: spec.labels().map(|l| (l.to_string(), Word::letter(l))).collect(),
        }
    }

    /// Parses `w1, w2, …` where each item is `word` or `label=word`.
    /// Unlabeled items are named `s1, s2, …` by position.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut entries = Vec::new();
        for (i, item) in text.split(',').enumerate() {
            let (label, word) = match item.split_once('=') {
                Some((l, w)) => (l.trim().to_string(), w),
                None => (format!("s{}", i + 1), item),
            };
            let word = Word::parse(word)?;
            if word.is_empty() {
                return Err(GroupError::InvalidWord(format!("generator `{label}` is the empty word")));
            }
            entries.push((label, word));
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(String, Word)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(l, _)| l.as_str())
    }

    pub fn word(&self, label: &str) -> Option<&Word> {
        self.entries.iter().find(|(l, _)| l == label).map(|(_, w)| w)
    }

    /// Rewrites a word over this set's labels into the underlying labels.
    pub fn expand(&self, word: &Word) -> Result<Word, GroupError> {
        word.substitute(|l| self.word(l).cloned())
    }

    /// Checks that every word only uses labels of `spec`.
    pub fn check_against<T: Scalar>(&self, spec: &GroupSpec<T>) -> Result<(), GroupError> {
        for (_, w) in &self.entries {
            for l in w.letters() {
                if spec.generator(&l.label).is_none() {
                    return Err(GroupError::UnknownLabel(l.label.clone()));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for GeneratingSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (l, w)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}={w}")?;
        }
        Ok(())
    }
}
