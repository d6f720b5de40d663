//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use growthforge::exact::{Matrix, Polynomial};
use growthforge::groups::{GroupElement, GroupSpec, Letter, Word};
use growthforge::spectra::euler_phi;
use growthforge::{BigInt, IntMatrix, IntPolynomial};
use num_complex::Complex64;
use num_integer::Integer;
use rand::Rng;

pub fn int_matrix<const R: usize, const C: usize>(rows: &[[i64; C]; R]) -> IntMatrix {
    Matrix::from_i64(rows)
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `p` has only roots of unity as roots iff `p | (x^N - 1)^deg` with
/// `N = lcm{d : φ(d) <= deg}`; checked by powering `x` modulo `p`.
pub fn roots_of_unity_by_power(p: &IntPolynomial) -> bool {
    let deg = p.degree().unwrap() as u64;
    if deg == 0 {
        return true;
    }
    let n = (1..=2 * deg * deg + 2)
        .filter(|&d| euler_phi(d) <= deg)
        .fold(1u64, |acc, d| acc.lcm(&d));
    let x = Polynomial::monomial(1);
    let x_n = x.pow_mod(n, p).unwrap();
    let base = &x_n - &Polynomial::one();
    base.pow_mod(deg, p).unwrap().is_zero()
}

/// Complex roots of a polynomial (coefficients highest degree first) by the
/// Aberth–Ehrlich iteration in double precision.
pub fn numeric_roots(coeffs_high_first: &[i64]) -> Vec<Complex64> {
    let c: Vec<Complex64> = coeffs_high_first
        .iter()
        .map(|&x| Complex64::new(x as f64, 0.0))
        .collect();
    let n = c.len() - 1;
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in &c {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let bound = 1.0 + c[1..].iter().map(|a| a.norm() / c[0].norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.9, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Numeric count of roots with `|z| < radius`, or `None` when a root is
/// within `tol` of the circle.
pub fn numeric_disk_count(coeffs_high_first: &[i64], radius: f64, tol: f64) -> Option<usize> {
    let roots = numeric_roots(coeffs_high_first);
    if roots.iter().any(|z| (z.norm() - radius).abs() < tol * radius.max(1.0)) {
        return None;
    }
    Some(roots.iter().filter(|z| z.norm() < radius).count())
}

pub fn random_monic(rng: &mut impl Rng, max_degree: usize, max_coeff: i64) -> Vec<i64> {
    let deg = rng.gen_range(1..=max_degree);
    let mut c = vec![1];
    for _ in 0..deg {
        c.push(rng.gen_range(-max_coeff..=max_coeff));
    }
    while *c.last().unwrap() == 0 {
        *c.last_mut().unwrap() = rng.gen_range(-max_coeff..=max_coeff);
    }
    c
}

/// Product of random elementary row operations and sign flips.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..steps {
        let mut e = IntMatrix::identity(n);
        if n > 1 && rng.gen_bool(0.85) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            e.set(i, j, BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 }));
        } else {
            let i = rng.gen_range(0..n);
            e.set(i, i, BigInt::from(-1));
        }
        m = m.mul(&e).unwrap();
    }
    m
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, max_entry: i64) -> IntMatrix {
    let data = (0..n * n).map(|_| BigInt::from(rng.gen_range(-max_entry..=max_entry))).collect();
    Matrix::new(n, n, data).unwrap()
}

pub fn random_word(rng: &mut impl Rng, labels: &[&str], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| Letter::new(labels[rng.gen_range(0..labels.len())], rng.gen_bool(0.5)))
            .collect(),
    )
}

/// Every word of length at most `radius` over the generators and their
/// inverses, evaluated directly.
pub fn ball_by_words(spec: &GroupSpec<BigInt>, radius: usize) -> HashSet<Vec<u8>> {
    let letters: Vec<Letter> = spec
        .labels()
        .flat_map(|l| [Letter::new(l, false), Letter::new(l, true)])
        .collect();
    let mut out = HashSet::new();
    let mut layer = vec![Word::empty()];
    out.insert(spec.identity().canonical_encoding());
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for l in &letters {
                let mut letters = w.letters().to_vec();
                letters.push(l.clone());
                let w = Word::from_letters(letters);
                out.insert(spec.evaluate_word(&w).unwrap().canonical_encoding());
                next.push(w);
            }
        }
        layer = next;
    }
    out
}

pub fn unipotent_z() -> GroupSpec<BigInt> {
    GroupSpec::matrix_group(2, vec![("g".into(), int_matrix(&[[1, 1], [0, 1]]))]).unwrap()
}

/// `Z²` as two commuting unipotent 3x3 matrices.
pub fn unipotent_z2() -> GroupSpec<BigInt> {
    GroupSpec::matrix_group(
        3,
        vec![
            ("a".into(), int_matrix(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]])),
            ("b".into(), int_matrix(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]])),
        ],
    )
    .unwrap()
}

pub fn split(v: Vec<BigInt>, k: i64) -> GroupElement<BigInt> {
    GroupElement::split(v, k)
}
