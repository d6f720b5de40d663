use num_integer::Integer;
use num_rational::Ratio;

use super::{check, split_action, Construction, FreeSemigroupWitness, WitnessError, DEFAULT_VERIFY_DEPTH};
use crate::exact::{hnf_saturate, Matrix};
use crate::groups::{
    finite_index_generators, CosetTable, GeneratingSet, GroupElement, GroupKind, GroupSpec, Word,
};
use crate::scalar::Scalar;
use crate::spectra::{
    annihilator_poly, char_poly, has_modulus_ge, kronecker_all_roots_of_unity, power_for_threshold,
    SpectraError, DEFAULT_POWER_BUDGET,
};

/// What one level of the search did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchStep<T> {
    /// Rank of the lattice at this level.
    pub rank: usize,
    /// The stable letter `t̂`, as a word in the input generators.
    pub t_hat: Word,
    /// `t`-exponent of `t̂` in this level's coordinates.
    pub exponent: i64,
    /// Power applied to the chosen generator to reach modulus 2.
    pub power: u32,
    /// Number of conjugates `t̂^q s t̂^{-q}` examined.
    pub conjugates: usize,
    /// Rank of the saturated span of those conjugates.
    pub sublattice_rank: usize,
    pub branch: SearchBranch<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchBranch<T> {
    /// The pair `(t̂, t̂ v)` for a lattice element `v` reached by `word`.
    Base { vector: Vec<T>, word: Word },
    /// Passed to the quotient by the sublattice, through the subgroup of
    /// the given index that contains `t̂`, with this many generators.
    Quotient { index: usize, generators: usize },
}

#[derive(Clone, Debug)]
struct Gen<T> {
    word: Word,
    vector: Vec<T>,
    exponent: i64,
}

/// Finds a free pair among short words in an arbitrary generating set.
///
/// The returned words are over the labels of `set`. The set is assumed to
/// generate the group; only the necessary condition that some generator
/// has a nonzero `t`-exponent is checked.
pub fn witness_search<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
) -> Result<FreeSemigroupWitness<T>, WitnessError> {
    witness_search_with_depth(spec, set, DEFAULT_VERIFY_DEPTH)
}

pub fn witness_search_with_depth<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
    verify_depth: u32,
) -> Result<FreeSemigroupWitness<T>, WitnessError> {
    let a = split_action(spec)?;
    set.check_against(spec)?;
    if kronecker_all_roots_of_unity(&char_poly(a)?)? {
        return Err(WitnessError::NotExponential);
    }
    let presented = spec.with_generating_set(set)?;
    let gens = presented
        .generators()
        .iter()
        .map(|g| match &g.element {
            GroupElement::Split { vector, exponent } => {
                Gen { word: Word::letter(&g.label), vector: vector.clone(), exponent: *exponent }
            }
            GroupElement::Matrix(_) => unreachable!("split extension generators"),
        })
        .collect();
    let mut trace = Vec::new();
    let (word_a, word_b) = level(a, gens, 0, a.rows(), &mut trace)?;
    let witness = FreeSemigroupWitness {
        word_a,
        word_b,
        construction: Construction::Search { trace },
        verified_depth: 0,
    };
    check(&presented, witness, verify_depth)
}

fn level<T: Scalar>(
    action: &Matrix<T>,
    gens: Vec<Gen<T>>,
    depth: usize,
    max_depth: usize,
    trace: &mut Vec<SearchStep<T>>,
) -> Result<(Word, Word), WitnessError> {
    if depth > max_depth {
        return Err(WitnessError::RecursionExhausted(format!("more than {max_depth} quotient levels")));
    }
    let r = action.rows();
    let kind = GroupKind::split_extension(action.clone())?;
    let element = |g: &Gen<T>| GroupElement::split(g.vector.clone(), g.exponent);
    let two = Ratio::from_integer(T::from_i64_exact(2));

    // Stable letter: the cheapest power of a generator or inverse with
    // nonzero t-exponent whose action reaches modulus 2.
    let mut best: Option<(usize, Word, i64, u32)> = None;
    for g in gens.iter().filter(|g| g.exponent != 0) {
        let inv = kind.invert(&element(g))?;
        for (word, k) in [(g.word.clone(), g.exponent), (g.word.inverse(), inv.exponent().unwrap())] {
            let n = match power_for_threshold(&action.pow(k)?, &two, DEFAULT_POWER_BUDGET) {
                Ok(n) => n,
                Err(SpectraError::AllRootsOfUnity) if depth == 0 => return Err(WitnessError::NotExponential),
                Err(SpectraError::AllRootsOfUnity) => {
                    return Err(WitnessError::RecursionExhausted("quotient action has no expanding eigenvalue".into()))
                }
                Err(e) => return Err(e.into()),
            };
            let cost = n as usize * word.len();
            if best.as_ref().is_none_or(|b| cost < b.0) {
                best = Some((cost, word, k, n));
            }
        }
    }
    let Some((_, base_word, base_k, n)) = best else {
        return Err(WitnessError::DegenerateGeneratingSet);
    };
    let t_hat = base_word.pow(n as i64);
    let e = base_k * n as i64;
    let b = action.pow(e)?;

    // Lattice elements: generators in V and all pairwise commutators.
    let mut s0: Vec<(Word, Vec<T>)> = gens
        .iter()
        .filter(|g| g.exponent == 0 && g.vector.iter().any(|x| !x.is_zero()))
        .map(|g| (g.word.clone(), g.vector.clone()))
        .collect();
    for (i, gi) in gens.iter().enumerate() {
        for gj in &gens[i + 1..] {
            let c = kind.commutator(&element(gi), &element(gj))?;
            let v = c.vector().expect("split element").to_vec();
            if v.iter().any(|x| !x.is_zero()) {
                let w = gi.word.concat(&gj.word).concat(&gi.word.inverse()).concat(&gj.word.inverse());
                s0.push((w, v));
            }
        }
    }
    // Conjugates by t̂^q for 0 <= q < r.
    let mut s1: Vec<(Word, Vec<T>)> = Vec::with_capacity(s0.len() * r);
    for (w, v) in &s0 {
        let mut v = v.clone();
        for q in 0..r as i64 {
            s1.push((t_hat.pow(q).concat(w).concat(&t_hat.pow(-q)), v.clone()));
            v = b.mul_vec(&v)?;
        }
    }

    let mut step = SearchStep {
        rank: r,
        t_hat: t_hat.clone(),
        exponent: e,
        power: n,
        conjugates: s1.len(),
        sublattice_rank: 0,
        branch: SearchBranch::Quotient { index: 0, generators: 0 },
    };
    for (w, v) in &s1 {
        if has_modulus_ge(&annihilator_poly(&b, v)?, &two)? {
            let word_a = t_hat.free_reduce();
            let word_b = t_hat.concat(w).free_reduce();
            let length = word_a.len().max(word_b.len());
            if depth == 0 && n == 1 && t_hat.len() == 1 && length > 3 + 2 * r {
                return Err(WitnessError::LengthBoundViolated { length, bound: 3 + 2 * r });
            }
            step.sublattice_rank = hnf_saturate(&s1.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(), r)?.rank();
            step.branch = SearchBranch::Base { vector: v.clone(), word: w.clone() };
            trace.push(step);
            return Ok((word_a, word_b));
        }
    }

    let vectors: Vec<Vec<T>> = s1.iter().map(|(_, v)| v.clone()).collect();
    let v1 = hnf_saturate(&vectors, r)?;
    step.sublattice_rank = v1.rank();
    if v1.rank() == 0 {
        return Err(WitnessError::NotExponential);
    }
    if v1.rank() == r {
        return Err(WitnessError::RecursionExhausted(
            "full-rank sublattice without an expanding cyclic vector".into(),
        ));
    }

    // Subgroup ⟨S⟩ ∩ (V ⋊ ⟨t̂⟩): stabilizer of 0 in the action on Z/d.
    let g = gens.iter().fold(e.abs(), |acc, x| acc.gcd(&x.exponent));
    let d = (e.abs() / g) as usize;
    let labels: Vec<String> = (0..gens.len()).map(|i| format!("g{i}")).collect();
    let shifts: Vec<(&str, i64)> = labels.iter().zip(&gens).map(|(l, x)| (l.as_str(), x.exponent / g)).collect();
    let table = CosetTable::cyclic(d, &shifts)?;
    let local_set = GeneratingSet::new(labels.iter().map(|l| (l.clone(), Word::letter(l))).collect())?;
    let local_spec = GroupSpec::new(
        kind.clone(),
        labels
            .iter()
            .zip(&gens)
            .map(|(l, x)| crate::groups::Generator { label: l.clone(), element: element(x) })
            .collect(),
    )?;
    let schreier = finite_index_generators(&local_set, &table)?;

    let q = v1.quotient_map().expect("proper saturated sublattice");
    let induced = v1.induced_quotient_action(&b)?;
    let mut next = Vec::new();
    for (_, w) in schreier.entries() {
        let value = local_spec.evaluate_word(w)?;
        let (Some(v), Some(k)) = (value.vector(), value.exponent()) else {
            unreachable!("split element")
        };
        debug_assert_eq!(k % e, 0);
        let word = w
            .substitute(|l| labels.iter().position(|x| x == l).map(|i| gens[i].word.clone()))?
            .free_reduce();
        next.push(Gen { word, vector: q.mul_vec(v)?, exponent: k / e });
    }
    step.branch = SearchBranch::Quotient { index: d, generators: next.len() };
    trace.push(step);
    level(&induced, next, depth + 1, max_depth, trace)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::witness::free_pair_standard;

    fn sol() -> GroupSpec<BigInt> {
        GroupSpec::split_extension(Matrix::from_i64(&[[2, 1], [1, 1]])).unwrap()
    }

    #[test]
    fn standard_set_matches_standard_pair() {
        let spec = sol();
        let w = witness_search(&spec, &GeneratingSet::standard(&spec)).unwrap();
        let s = free_pair_standard(spec.action().unwrap()).unwrap();
        assert_eq!((&w.word_a, &w.word_b), (&s.word_a, &s.word_b));
        assert!(w.max_length() <= 7);
    }

    #[test]
    fn mixed_generating_set() {
        let spec = sol();
        let set = GeneratingSet::parse("x=t e1, y=e1 e2, z=e2").unwrap();
        let w = witness_search(&spec, &set).unwrap();
        assert_eq!(w.verified_depth, 8);
        assert!(w.max_length() <= 7, "{:?}", w);
    }

    #[test]
    fn degenerate_and_polynomial() {
        let spec = sol();
        assert_eq!(
            witness_search(&spec, &GeneratingSet::parse("a=e1, b=e2").unwrap()),
            Err(WitnessError::DegenerateGeneratingSet)
        );
        let heis = GroupSpec::<BigInt>::split_extension(Matrix::from_i64(&[[1, 1], [0, 1]])).unwrap();
        assert_eq!(
            witness_search(&heis, &GeneratingSet::standard(&heis)),
            Err(WitnessError::NotExponential)
        );
    }

    #[test]
    fn quotient_branch_on_a_non_generating_set() {
        // ⟨t, e3⟩ only sees the fixed line of e3; the quotient by it carries
        // the expanding block, but the images of the generators are pure
        // powers of the stable letter there.
        let a = Matrix::from_i64(&[[1, 1, 0], [1, 0, 0], [0, 0, 1]]);
        let spec = GroupSpec::<BigInt>::split_extension(a).unwrap();
        let set = GeneratingSet::parse("t=t, c=e3").unwrap();
        assert_eq!(witness_search(&spec, &set), Err(WitnessError::NotExponential));
    }
}
