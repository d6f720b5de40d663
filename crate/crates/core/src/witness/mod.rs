//! Free-semigroup witnesses for split extensions `Z^r ⋊_A Z`.
//!
//! A pair of words `a, b` generating a free semigroup of rank two, with
//! both words of length at most `L`, forces `β_n >= 2^{n/L}` and so a growth
//! rate of at least `2^{1/L}`. [`free_pair_standard`] builds the pair
//! `(t^n, t^n v)` for the standard generators, [`witness_search`] finds one
//! in an arbitrary generating set, and [`verify_free_semigroup`] checks a
//! pair by brute force.

mod search;
mod verify;

pub use search::{witness_search, witness_search_with_depth, SearchBranch, SearchStep};
pub use verify::{verify_free_semigroup, Verification, MAX_VERIFY_DEPTH};

use num_rational::Ratio;
use thiserror::Error;

use crate::exact::{ExactError, Matrix};
use crate::groups::{GroupError, GroupSpec, Word};
use crate::growth::format_significant;
use crate::scalar::Scalar;
use crate::spectra::{
    annihilator_poly, char_poly, has_modulus_ge, kronecker_all_roots_of_unity, power_for_threshold,
    SpectraError, DEFAULT_POWER_BUDGET,
};

/// Depth at which every constructed witness is checked before it is returned.
pub const DEFAULT_VERIFY_DEPTH: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("every eigenvalue of the action is a root of unity")]
    AllRootsOfUnity,
    #[error("no basis vector or pairwise sum has an annihilator root of modulus >= 2")]
    NoCyclicSupport,
    #[error("the group does not have exponential growth")]
    NotExponential,
    #[error("no generator has a nonzero t-exponent, so the set cannot generate")]
    DegenerateGeneratingSet,
    #[error("witness search exhausted: {0}")]
    RecursionExhausted(String),
    #[error("verification depth {depth} exceeds the limit of {MAX_VERIFY_DEPTH}")]
    BudgetExceeded { depth: u32 },
    #[error("verification depth must be at least 1")]
    InvalidDepth,
    #[error("expected a split extension, found a {0}")]
    KindMismatch(String),
    #[error("constructed pair is not free: `{earlier}` equals `{later}`")]
    VerificationFailed { earlier: String, later: String },
    #[error("witness length {length} exceeds the bound {bound}")]
    LengthBoundViolated { length: usize, bound: usize },
}

/// How a witness was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction<T> {
    /// `(t^power, t^power · v)` in the standard generators.
    Standard { power: u32, vector: Vec<T> },
    /// Output of [`witness_search`], one step per recursion level.
    Search { trace: Vec<SearchStep<T>> },
}

/// Two words generating a free semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSemigroupWitness<T> {
    pub word_a: Word,
    pub word_b: Word,
    pub construction: Construction<T>,
    /// Depth the oracle checked; 0 when unchecked.
    pub verified_depth: u32,
}

impl<T: Scalar> FreeSemigroupWitness<T> {
    /// `L = max(|a|, |b|)`.
    pub fn max_length(&self) -> usize {
        self.word_a.len().max(self.word_b.len())
    }

    /// `2^{1/L}`.
    pub fn rate_lower_bound(&self) -> f64 {
        2f64.powf(1.0 / self.max_length() as f64)
    }

    pub fn rate_lower_bound_display(&self) -> String {
        format_significant(self.rate_lower_bound(), 6)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    PolynomialGrowth,
    UniformExponentialGrowth,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::PolynomialGrowth => "polynomial_growth",
            Verdict::UniformExponentialGrowth => "uniform_exponential_growth",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence<T> {
    /// The characteristic polynomial has only roots of unity as roots.
    KroneckerTrue,
    Witness(Box<FreeSemigroupWitness<T>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<T> {
    pub verdict: Verdict,
    pub evidence: Evidence<T>,
}

impl<T: Scalar> Classification<T> {
    pub fn witness(&self) -> Option<&FreeSemigroupWitness<T>> {
        match &self.evidence {
            Evidence::Witness(w) => Some(w),
            Evidence::KroneckerTrue => None,
        }
    }
}

pub(crate) fn split_action<T: Scalar>(spec: &GroupSpec<T>) -> Result<&Matrix<T>, WitnessError> {
    spec.action().ok_or_else(|| WitnessError::KindMismatch(spec.kind().name().into()))
}

/// Polynomial growth when every eigenvalue of `A` is a root of unity,
/// uniform exponential growth with a verified witness otherwise.
pub fn classify_split_extension<T: Scalar>(spec: &GroupSpec<T>) -> Result<Classification<T>, WitnessError> {
    let a = split_action(spec)?;
    if kronecker_all_roots_of_unity(&char_poly(a)?)? {
        return Ok(Classification { verdict: Verdict::PolynomialGrowth, evidence: Evidence::KroneckerTrue });
    }
    let w = free_pair_standard(a)?;
    Ok(Classification {
        verdict: Verdict::UniformExponentialGrowth,
        evidence: Evidence::Witness(Box::new(w)),
    })
}

/// `(t^n, t^n v)` in the standard generators `t, e1, …, er`.
///
/// `n` is the least power for which `A^n` has an eigenvalue of modulus at
/// least 2, and `v` the first basis vector (then the first pairwise sum
/// `e_i + e_j`) whose annihilator under `A^n` has such a root.
pub fn free_pair_standard<T: Scalar>(a: &Matrix<T>) -> Result<FreeSemigroupWitness<T>, WitnessError> {
    free_pair_standard_with_depth(a, DEFAULT_VERIFY_DEPTH)
}

pub fn free_pair_standard_with_depth<T: Scalar>(
    a: &Matrix<T>,
    verify_depth: u32,
) -> Result<FreeSemigroupWitness<T>, WitnessError> {
    let spec = GroupSpec::split_extension(a.clone())?;
    let two = Ratio::from_integer(T::from_i64_exact(2));
    let n = power_for_threshold(a, &two, DEFAULT_POWER_BUDGET).map_err(|e| match e {
        SpectraError::AllRootsOfUnity => WitnessError::AllRootsOfUnity,
        e => e.into(),
    })?;
    let b = a.pow(n as i64)?;
    let r = a.rows();
    let basis = |i: usize| {
        let mut v = vec![T::zero(); r];
        v[i] = T::one();
        v
    };
    let mut candidates: Vec<(Vec<T>, Word)> = (0..r).map(|i| (basis(i), Word::letter(format!("e{}", i + 1)))).collect();
    for i in 0..r {
        for j in i + 1..r {
            let v = basis(i).into_iter().zip(basis(j)).map(|(x, y)| x + y).collect();
            let w = Word::parse(&format!("e{} e{}", i + 1, j + 1))?;
            candidates.push((v, w));
        }
    }
    for (v, v_word) in candidates {
        if has_modulus_ge(&annihilator_poly(&b, &v)?, &two)? {
            let t_n = Word::letter("t").pow(n as i64);
            let witness = FreeSemigroupWitness {
                word_b: t_n.concat(&v_word),
                word_a: t_n,
                construction: Construction::Standard { power: n, vector: v },
                verified_depth: 0,
            };
            return check(&spec, witness, verify_depth);
        }
    }
    Err(WitnessError::NoCyclicSupport)
}

pub(crate) fn check<T: Scalar>(
    spec: &GroupSpec<T>,
    mut witness: FreeSemigroupWitness<T>,
    depth: u32,
) -> Result<FreeSemigroupWitness<T>, WitnessError> {
    if depth == 0 {
        return Ok(witness);
    }
    match verify_free_semigroup(spec, &witness.word_a, &witness.word_b, depth)? {
        Verification::Free { .. } => {
            witness.verified_depth = depth;
            Ok(witness)
        }
        Verification::Collision { earlier, later } => Err(WitnessError::VerificationFailed { earlier, later }),
    }
}
