mod common;

use common::*;
use growthforge::spectra::{
    annihilator_poly, char_poly, has_modulus_ge, kronecker_all_roots_of_unity, power_for_threshold,
    roots_in_open_disk, SpectraError,
};
use growthforge::{BigInt, BigRational, IntPolynomial};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn char_poly_is_a_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let a = random_matrix(&mut rng, n, 5);
        let p = random_unimodular(&mut rng, n, 5);
        let conj = p.mul(&a).unwrap().mul(&p.inverse().unwrap()).unwrap();
        assert_eq!(char_poly(&a).unwrap(), char_poly(&conj).unwrap());
    }
}

#[test]
fn disk_examples() {
    let sol = IntPolynomial::from_i64(&[1, -3, 1]);
    assert_eq!(roots_in_open_disk(&sol, &ratio(2, 1)).unwrap().roots_strictly_inside, 1);
    assert_eq!(roots_in_open_disk(&sol, &ratio(3, 1)).unwrap().roots_strictly_inside, 2);
    assert_eq!(has_modulus_ge(&sol, &ratio(2, 1)), Ok(true));
    assert_eq!(has_modulus_ge(&IntPolynomial::from_i64(&[1, 0, 1]), &ratio(2, 1)), Ok(false));
    assert_eq!(
        roots_in_open_disk(&sol, &ratio(0, 1)).map(|c| c.roots_strictly_inside),
        Err(SpectraError::NonPositiveRadius)
    );
}

proptest! {
    #[test]
    fn annihilator_divides_char_poly(seed in any::<u64>(), n in 1usize..=5, v in prop::collection::vec(-5i64..=5, 5)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_unimodular(&mut rng, n, 8);
        let v = big_vec(&v[..n]);
        let ann = annihilator_poly(&a, &v).unwrap();
        prop_assert!(ann.is_monic());
        prop_assert!(char_poly(&a).unwrap().is_divisible_by(&ann).unwrap());
    }

    #[test]
    fn kronecker_agrees_with_power_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = if rng.gen_bool(0.5) {
            // characteristic polynomial of a random finite-order-ish product
            let n = rng.gen_range(1..=4);
            char_poly(&random_unimodular(&mut rng, n, 3)).unwrap()
        } else {
            IntPolynomial::from_i64(&random_monic(&mut rng, 6, 3))
        };
        prop_assert_eq!(kronecker_all_roots_of_unity(&p).unwrap(), roots_of_unity_by_power(&p));
    }

    #[test]
    fn disk_counts_grow_with_radius(c in prop::collection::vec(-20i64..=20, 1..=6)) {
        let mut coeffs = vec![1];
        coeffs.extend(c);
        let p = IntPolynomial::from_i64(&coeffs);
        let radii = [ratio(1, 2), ratio(1, 1), ratio(3, 2), ratio(2, 1), ratio(7, 2), ratio(30, 1)];
        let counts: Vec<Option<usize>> = radii
            .iter()
            .map(|r| roots_in_open_disk(&p, r).ok().map(|c| c.roots_strictly_inside))
            .collect();
        let certified: Vec<usize> = counts.into_iter().flatten().collect();
        prop_assert!(certified.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn disk_counts_match_numeric_roots(c in prop::collection::vec(-20i64..=20, 1..=6), pick in 0usize..3) {
        let mut coeffs = vec![1];
        coeffs.extend(c);
        let (num, den) = [(1, 1), (3, 2), (2, 1)][pick];
        let p = IntPolynomial::from_i64(&coeffs);
        if let (Ok(exact), Some(numeric)) = (
            roots_in_open_disk(&p, &ratio(num, den)),
            numeric_disk_count(&coeffs, num as f64 / den as f64, 1e-6),
        ) {
            prop_assert_eq!(exact.roots_strictly_inside, numeric);
        }
    }

    #[test]
    fn threshold_power_is_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=3);
        let a = random_unimodular(&mut rng, n, 6);
        let two = ratio(2, 1);
        match power_for_threshold(&a, &two, 64) {
            Ok(k) => {
                for m in k..k + 4 {
                    let p = char_poly(&a.pow(m as i64).unwrap()).unwrap();
                    prop_assert!(has_modulus_ge(&p, &two).unwrap());
                }
                if k > 1 {
                    let p = char_poly(&a.pow(k as i64 - 1).unwrap()).unwrap();
                    prop_assert!(!has_modulus_ge(&p, &two).unwrap());
                }
            }
            Err(SpectraError::AllRootsOfUnity) => {
                prop_assert!(kronecker_all_roots_of_unity(&char_poly(&a).unwrap()).unwrap());
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
