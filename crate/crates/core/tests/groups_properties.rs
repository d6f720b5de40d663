mod common;

use common::*;
use growthforge::groups::{
    canonical_encode, finite_index_generators, CosetTable, GeneratingSet, GroupElement, GroupSpec, Word,
};
use growthforge::BigInt;
use proptest::prelude::*;

fn sol() -> GroupSpec<BigInt> {
    GroupSpec::split_extension(int_matrix(&[[2, 1], [1, 1]])).unwrap()
}

fn heisenberg_matrices() -> GroupSpec<BigInt> {
    GroupSpec::matrix_group(
        3,
        vec![
            ("x".into(), int_matrix(&[[1, 1, 0], [0, 1, 0], [0, 0, 1]])),
            ("y".into(), int_matrix(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]])),
        ],
    )
    .unwrap()
}

fn word_strategy(labels: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..labels.len(), any::<bool>()), 0..=max_len).prop_map(move |ls| {
        Word::from_letters(ls.into_iter().map(|(i, inv)| growthforge::groups::Letter::new(labels[i], inv)).collect())
    })
}

#[test]
fn commutator_examples() {
    let g = sol();
    let t = g.generator("t").unwrap();
    let a = g.generator("e1").unwrap();
    let b = g.generator("e2").unwrap();
    assert_eq!(g.commutator(t, a).unwrap(), split(big_vec(&[1, 1]), 0));
    assert!(g.commutator(a, b).unwrap().is_identity());
    assert!(g.commutator(t, t).unwrap().is_identity());
}

#[test]
fn encodings_separate_kinds_and_values() {
    let g = sol();
    let e = g.evaluate_word(&Word::parse("e1 e1^-1").unwrap()).unwrap();
    assert_eq!(canonical_encode(&e), canonical_encode(&g.identity()));
    let m = heisenberg_matrices();
    assert_ne!(canonical_encode(&m.identity()), canonical_encode(&g.identity()));
}

#[test]
fn schreier_generators_for_cyclic_quotients() {
    let z = unipotent_z();
    let set = GeneratingSet::standard(&z);
    for d in 1..=6usize {
        let table = CosetTable::cyclic(d, &[("g", 1)]).unwrap();
        let out = finite_index_generators(&set, &table).unwrap();
        for (_, w) in out.entries() {
            assert!(w.len() < 2 * d);
            assert_eq!(table.act(0, w).unwrap(), 0);
        }
        let expected = Word::letter("g").pow(d as i64);
        assert!(out.entries().iter().any(|(_, w)| *w == expected || *w == expected.inverse()));
    }
}

#[test]
fn schreier_generators_for_a_non_abelian_action() {
    // Free group on a, b acting on three cosets: a a 3-cycle, b a transposition.
    let set = GeneratingSet::parse("a=a, b=b").unwrap();
    let table = CosetTable::new(3, vec![("a".into(), vec![1, 2, 0]), ("b".into(), vec![1, 0, 2])]).unwrap();
    let out = finite_index_generators(&set, &table).unwrap();
    // rank of an index-3 subgroup of F_2 is 3·(2-1)+1 = 4
    assert_eq!(out.len(), 4);
    for (_, w) in out.entries() {
        assert!(w.len() <= 5);
        assert_eq!(table.act(0, w).unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn split_model_is_associative(
        a in word_strategy(&["t", "e1", "e2"], 6),
        b in word_strategy(&["t", "e1", "e2"], 6),
        c in word_strategy(&["t", "e1", "e2"], 6),
    ) {
        let g = sol();
        let (x, y, z) = (g.evaluate_word(&a).unwrap(), g.evaluate_word(&b).unwrap(), g.evaluate_word(&c).unwrap());
        prop_assert_eq!(
            g.compose(&g.compose(&x, &y).unwrap(), &z).unwrap(),
            g.compose(&x, &g.compose(&y, &z).unwrap()).unwrap()
        );
        prop_assert!(g.compose(&x, &g.invert(&x).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn matrix_model_is_associative(
        a in word_strategy(&["x", "y"], 6),
        b in word_strategy(&["x", "y"], 6),
        c in word_strategy(&["x", "y"], 6),
    ) {
        let g = heisenberg_matrices();
        let (x, y, z) = (g.evaluate_word(&a).unwrap(), g.evaluate_word(&b).unwrap(), g.evaluate_word(&c).unwrap());
        prop_assert_eq!(
            g.compose(&g.compose(&x, &y).unwrap(), &z).unwrap(),
            g.compose(&x, &g.compose(&y, &z).unwrap()).unwrap()
        );
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in word_strategy(&["t", "e1", "e2"], 8), b in word_strategy(&["t", "e1", "e2"], 8)) {
        let g = sol();
        let joined = g.evaluate_word(&a.concat(&b)).unwrap();
        prop_assert_eq!(joined, g.compose(&g.evaluate_word(&a).unwrap(), &g.evaluate_word(&b).unwrap()).unwrap());
        prop_assert_eq!(g.evaluate_word(&a.inverse()).unwrap(), g.invert(&g.evaluate_word(&a).unwrap()).unwrap());
        prop_assert_eq!(g.evaluate_word(&a.free_reduce()).unwrap(), g.evaluate_word(&a).unwrap());
    }

    #[test]
    fn conjugation_by_t_applies_the_action(k in -8i64..=8, v in prop::collection::vec(-50i64..=50, 2)) {
        let g = sol();
        let tk = split(big_vec(&[0, 0]), k);
        let x = split(big_vec(&v), 0);
        let conj = g.compose(&g.compose(&tk, &x).unwrap(), &g.invert(&tk).unwrap()).unwrap();
        let expected = int_matrix(&[[2, 1], [1, 1]]).pow(k).unwrap().mul_vec(&big_vec(&v)).unwrap();
        prop_assert_eq!(conj, GroupElement::split(expected, 0));
    }

    #[test]
    fn schreier_words_stabilize_the_base_coset(perm_seed in prop::collection::vec(0usize..1000, 2), d in 1usize..=5) {
        // random permutations from a seed via a Lehmer-style decode
        let perm = |mut s: usize| {
            let mut pool: Vec<usize> = (0..d).collect();
            let mut out = Vec::new();
            while !pool.is_empty() {
                out.push(pool.remove(s % pool.len()));
                s /= 3;
            }
            out
        };
        let table = CosetTable::new(d, vec![("a".into(), perm(perm_seed[0])), ("b".into(), perm(perm_seed[1]))]).unwrap();
        let set = GeneratingSet::parse("a=a, b=b").unwrap();
        match finite_index_generators(&set, &table) {
            Ok(out) => {
                for (_, w) in out.entries() {
                    prop_assert!(w.len() < 2 * d);
                    prop_assert_eq!(table.act(0, w).unwrap(), 0);
                }
            }
            Err(growthforge::groups::GroupError::NotTransitive(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
