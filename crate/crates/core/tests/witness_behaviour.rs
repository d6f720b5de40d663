mod common;

use common::*;
use growthforge::groups::{GeneratingSet, GroupSpec, Word};
use growthforge::growth::{enumerate_ball, rate_bounds, DEFAULT_BUDGET};
use growthforge::witness::{
    classify_split_extension, free_pair_standard, verify_free_semigroup, witness_search,
    witness_search_with_depth, Construction, SearchBranch, Verdict, Verification, WitnessError,
};
use growthforge::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn split_spec(rows: [[i64; 2]; 2]) -> GroupSpec<BigInt> {
    GroupSpec::split_extension(int_matrix(&rows)).unwrap()
}

fn words(a: &str, b: &str) -> (Word, Word) {
    (Word::parse(a).unwrap(), Word::parse(b).unwrap())
}

#[test]
fn classification_carries_matching_evidence() {
    let c = classify_split_extension(&split_spec([[2, 1], [1, 1]])).unwrap();
    assert_eq!(c.verdict, Verdict::UniformExponentialGrowth);
    let w = c.witness().unwrap();
    assert_eq!((w.word_a.to_string(), w.word_b.to_string()), ("t".into(), "t e1".into()));
    assert!(matches!(w.construction, Construction::Standard { power: 1, .. }));
    let c = classify_split_extension(&split_spec([[1, 1], [0, 1]])).unwrap();
    assert_eq!(c.verdict, Verdict::PolynomialGrowth);
    assert!(c.witness().is_none());
}

#[test]
fn verify_examples() {
    let sol = split_spec([[2, 1], [1, 1]]);
    let (a, b) = words("t", "t e1");
    assert_eq!(verify_free_semigroup(&sol, &a, &b, 10).unwrap(), Verification::Free { distinct: 2046 });
    let (a, b) = words("t e2", "t e2");
    assert_eq!(
        verify_free_semigroup(&sol, &a, &b, 1).unwrap(),
        Verification::Collision { earlier: "a".into(), later: "b".into() }
    );
    let z2 = unipotent_z2();
    let (a, b) = words("a", "b");
    assert_eq!(
        verify_free_semigroup(&z2, &a, &b, 2).unwrap(),
        Verification::Collision { earlier: "ab".into(), later: "ba".into() }
    );
}

#[test]
fn search_examples() {
    let sol = split_spec([[2, 1], [1, 1]]);
    let w = witness_search(&sol, &GeneratingSet::standard(&sol)).unwrap();
    assert_eq!((w.word_a.len(), w.word_b.len()), (1, 2));

    let set = GeneratingSet::parse("ta=t e1, ab=e1 e2, b=e2").unwrap();
    let w = witness_search(&sol, &set).unwrap();
    assert!(w.max_length() <= 7);
    let presented = sol.with_generating_set(&set).unwrap();
    assert!(verify_free_semigroup(&presented, &w.word_a, &w.word_b, 8).unwrap().is_free());
    let Construction::Search { trace } = &w.construction else { panic!("search trace expected") };
    assert!(matches!(trace.last().unwrap().branch, SearchBranch::Base { .. }));

    assert_eq!(
        witness_search(&sol, &GeneratingSet::parse("a=e1, b=e2").unwrap()),
        Err(WitnessError::DegenerateGeneratingSet)
    );
    assert!(matches!(
        witness_search(&sol, &GeneratingSet::parse("a=q").unwrap()),
        Err(WitnessError::Group(_))
    ));
}

#[test]
fn search_uses_powers_when_needed() {
    let fib = split_spec([[1, 1], [1, 0]]);
    let w = witness_search(&fib, &GeneratingSet::standard(&fib)).unwrap();
    let s = free_pair_standard(fib.action().unwrap()).unwrap();
    assert_eq!((w.word_a.clone(), w.word_b.clone()), (s.word_a, s.word_b));
    let Construction::Search { trace } = &w.construction else { panic!() };
    assert_eq!(trace[0].power, 2);
}

#[test]
fn rank_three_search() {
    let a = int_matrix(&[[0, 0, 1], [1, 0, -1], [0, 1, 3]]);
    let spec = GroupSpec::<BigInt>::split_extension(a).unwrap();
    let w = witness_search_with_depth(&spec, &GeneratingSet::standard(&spec), 10).unwrap();
    assert_eq!(w.verified_depth, 10);
    assert!(w.max_length() <= 3 + 2 * 3);
}

#[test]
fn lower_bound_never_exceeds_upper_bound() {
    for rows in [[[2, 1], [1, 1]], [[1, 1], [1, 0]], [[3, 2], [1, 1]]] {
        let spec = split_spec(rows);
        let report = enumerate_ball(&spec, &GeneratingSet::standard(&spec), 7, DEFAULT_BUDGET).unwrap();
        let w = free_pair_standard(spec.action().unwrap()).unwrap();
        let b = rate_bounds(&report, Some(&w)).unwrap();
        assert!(b.lower <= b.upper);
        assert!((w.rate_lower_bound() - 2f64.powf(1.0 / w.max_length() as f64)).abs() < 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_is_conjugation_and_inversion_invariant(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_unimodular(&mut rng, n, 5);
        let p = random_unimodular(&mut rng, n, 4);
        let conj = p.mul(&a).unwrap().mul(&p.inverse().unwrap()).unwrap();
        let verdict = |m| classify_split_extension(&GroupSpec::<BigInt>::split_extension(m).unwrap()).unwrap().verdict;
        let v = verdict(a.clone());
        prop_assert_eq!(verdict(conj), v);
        prop_assert_eq!(verdict(a.inverse().unwrap()), v);
    }

    #[test]
    fn emitted_witnesses_pass_the_oracle(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_unimodular(&mut rng, n, 5);
        let spec = GroupSpec::<BigInt>::split_extension(a.clone()).unwrap();
        match free_pair_standard(&a) {
            Ok(w) => {
                prop_assert_eq!(w.verified_depth, 8);
                let s = witness_search(&spec, &GeneratingSet::standard(&spec)).unwrap();
                prop_assert!(verify_free_semigroup(&spec, &s.word_a, &s.word_b, 8).unwrap().is_free());
            }
            Err(WitnessError::AllRootsOfUnity) => {
                prop_assert_eq!(
                    classify_split_extension(&spec).unwrap().verdict,
                    Verdict::PolynomialGrowth
                );
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
