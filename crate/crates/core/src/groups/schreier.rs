use std::collections::{HashSet, VecDeque};

use super::{GeneratingSet, GroupError, Word};

/// Right action of a generating set on `degree` coset symbols `0..degree`.
///
/// The subgroup it describes is the stabilizer of symbol 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    degree: usize,
    images: Vec<(String, Vec<usize>)>,
}

impl CosetTable {
    pub fn new(degree: usize, images: Vec<(String, Vec<usize>)>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidTable("degree must be positive".into()));
        }
        let mut seen = HashSet::new();
        for (label, perm) in &images {
            if !seen.insert(label.as_str()) {
                return Err(GroupError::InvalidTable(format!("label `{label}` listed twice")));
            }
            if perm.len() != degree {
                return Err(GroupError::InvalidTable(format!(
                    "`{label}` maps {} symbols, expected {degree}",
                    perm.len()
                )));
            }
            let mut hit = vec![false; degree];
            for &x in perm {
                if x >= degree || std::mem::replace(&mut hit[x], true) {
                    return Err(GroupError::InvalidTable(format!("`{label}` is not a permutation")));
                }
            }
        }
        Ok(Self { degree, images })
    }

    /// The cyclic action `x ↦ x + shift mod degree` for each label.
    pub fn cyclic(degree: usize, shifts: &[(&str, i64)]) -> Result<Self, GroupError> {
        let d = degree as i64;
        let images = shifts
            .iter()
            .map(|(l, k)| (l.to_string(), (0..d).map(|x| (x + k).rem_euclid(d.max(1)) as usize).collect()))
            .collect();
        Self::new(degree, images)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn perm(&self, label: &str) -> Result<&[usize], GroupError> {
        self.images
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p.as_slice())
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    /// `x · word`, reading letters left to right.
    pub fn act(&self, mut x: usize, word: &Word) -> Result<usize, GroupError> {
        for l in word.letters() {
            let p = self.perm(&l.label)?;
            x = if l.inverse {
                p.iter().position(|&y| y == x).expect("validated permutation")
            } else {
                p[x]
            };
        }
        Ok(x)
    }
}

/// Schreier generators for the stabilizer of symbol 0.
///
/// Coset representatives come from a breadth-first search over `S ∪ S⁻¹`,
/// so each has length at most `d - 1`. For each representative `u` and each
/// `s` in `S` the word `u s rep(u s)⁻¹` is freely reduced; nonempty results
/// are kept once each, in discovery order, labeled `h1, h2, …`. Every word
/// has length at most `2d - 1`.
pub fn finite_index_generators(set: &GeneratingSet, table: &CosetTable) -> Result<GeneratingSet, GroupError> {
    let d = table.degree();
    for label in set.labels() {
        table.perm(label)?;
    }
    let mut reps: Vec<Option<Word>> = vec![None; d];
    reps[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let u = reps[x].clone().expect("queued symbols have representatives");
        for label in set.labels() {
            for inverse in [false, true] {
                let letter = Word::from_letters(vec![super::Letter::new(label, inverse)]);
                let y = table.act(x, &letter)?;
                if reps[y].is_none() {
                    reps[y] = Some(u.concat(&letter));
                    queue.push_back(y);
                }
            }
        }
    }
    if let Some(missing) = reps.iter().position(Option::is_none) {
        return Err(GroupError::NotTransitive(format!("symbol {missing} is not reachable from 0")));
    }
    let reps: Vec<Word> = reps.into_iter().map(Option::unwrap).collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (x, u) in reps.iter().enumerate() {
        for label in set.labels() {
            let s = Word::letter(label);
            let y = table.act(x, &s)?;
            let w = u.concat(&s).concat(&reps[y].inverse()).free_reduce();
            if !w.is_empty() && seen.insert(w.clone()) {
                out.push((format!("h{}", out.len() + 1), w));
            }
        }
    }
    GeneratingSet::new(out)
}
