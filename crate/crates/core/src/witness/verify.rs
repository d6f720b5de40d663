use std::collections::HashMap;

use super::WitnessError;
use crate::groups::{GroupElement, GroupSpec, Word};
use crate::scalar::Scalar;

/// Largest depth the oracle accepts (`2^21 - 2` elements).
pub const MAX_VERIFY_DEPTH: u32 = 20;

/// Outcome of the brute-force freeness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    /// All `2^{depth+1} - 2` nonempty positive words were distinct.
    Free { distinct: u64 },
    /// Two distinct words over `{a, b}` with equal values; `earlier` precedes
    /// `later` in shortlex order and `later` is the first word to repeat.
    Collision { earlier: String, later: String },
}

impl Verification {
    pub fn is_free(&self) -> bool {
        matches!(self, Verification::Free { .. })
    }
}

/// Evaluates every nonempty product of `a` and `b` up to `depth` letters and
/// checks that they are pairwise distinct.
pub fn verify_free_semigroup<T: Scalar>(
    spec: &GroupSpec<T>,
    word_a: &Word,
    word_b: &Word,
    depth: u32,
) -> Result<Verification, WitnessError> {
    if depth == 0 {
        return Err(WitnessError::InvalidDepth);
    }
    if depth > MAX_VERIFY_DEPTH {
        return Err(WitnessError::BudgetExceeded { depth });
    }
    let ga = spec.evaluate_word(word_a)?;
    let gb = spec.evaluate_word(word_b)?;
    let kind = spec.kind();
    let mut first: HashMap<Vec<u8>, String> = HashMap::new();
    let mut layer: Vec<(String, GroupElement<T>)> = vec![(String::new(), spec.identity())];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for (prefix, g) in &layer {
            for (letter, h) in [('a', &ga), ('b', &gb)] {
                let name = format!("{prefix}{letter}");
                let value = kind.compose(g, h)?;
                let key = value.canonical_encoding();
                if let Some(earlier) = first.get(&key) {
                    return Ok(Verification::Collision { earlier: earlier.clone(), later: name });
                }
                first.insert(key, name.clone());
                next.push((name, value));
            }
        }
        layer = next;
    }
    Ok(Verification::Free { distinct: first.len() as u64 })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::exact::Matrix;

    fn sol() -> GroupSpec<BigInt> {
        GroupSpec::split_extension(Matrix::from_i64(&[[2, 1], [1, 1]])).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn standard_pair_is_free() {
        assert_eq!(
            verify_free_semigroup(&sol(), &w("t"), &w("t e1"), 10).unwrap(),
            Verification::Free { distinct: 2046 }
        );
    }

    #[test]
    fn collisions() {
        assert_eq!(
            verify_free_semigroup(&sol(), &w("e1 t"), &w("e1 t"), 1).unwrap(),
            Verification::Collision { earlier: "a".into(), later: "b".into() }
        );
        assert_eq!(
            verify_free_semigroup(&sol(), &w("e1"), &w("e2"), 2).unwrap(),
            Verification::Collision { earlier: "ab".into(), later: "ba".into() }
        );
        // t and t^-1 multiply to the identity, which is never a positive word,
        // but "ab" = "ba"
        assert_eq!(
            verify_free_semigroup(&sol(), &w("t"), &w("t^-1"), 3).unwrap(),
            Verification::Collision { earlier: "ab".into(), later: "ba".into() }
        );
    }

    #[test]
    fn depth_limits() {
        assert_eq!(
            verify_free_semigroup(&sol(), &w("t"), &w("e1"), 0),
            Err(WitnessError::InvalidDepth)
        );
        assert_eq!(
            verify_free_semigroup(&sol(), &w("t"), &w("e1"), 21),
            Err(WitnessError::BudgetExceeded { depth: 21 })
        );
    }
}
