use super::SpectraError;
use crate::exact::Polynomial;
use crate::scalar::Scalar;

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, from `x^n - 1 = ∏_{d | n} Φ_d`.
pub fn cyclotomic<T: Scalar>(n: u64) -> Polynomial<T> {
    assert!(n >= 1, "cyclotomic index starts at 1");
    let mut p = &Polynomial::monomial(n as usize) - &Polynomial::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p
            .div_rem(&cyclotomic(d))
            .expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// Whether every complex root of the monic polynomial `p` is a root of unity.
///
/// A root of unity of order `d` that is a root of a monic integer polynomial
/// of degree `r` has `φ(d) <= r`, and `φ(d) >= sqrt(d/2)` bounds the search
/// to `d <= 2r²`. The test strips every such `Φ_d` factor, with multiplicity,
/// and checks that nothing but 1 remains.
pub fn kronecker_all_roots_of_unity<T: Scalar>(p: &Polynomial<T>) -> Result<bool, SpectraError> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic);
    }
    if p.constant_term().is_zero() {
        return Err(SpectraError::ZeroConstantTerm);
    }
    let deg = p.degree().expect("monic polynomials are nonzero") as u64;
    let mut rest = p.clone();
    let bound = 2 * deg * deg;
    for d in 1..=bound.max(2) {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if remaining == 0 {
            break;
        }
        if euler_phi(d) > remaining {
            continue;
        }
        let phi_d = cyclotomic::<T>(d);
        loop {
            let (q, r) = rest.div_rem(&phi_d)?;
            if !r.is_zero() {
                break;
            }
            rest = q;
        }
    }
    Ok(rest.degree() == Some(0) && rest.leading().is_some_and(T::is_one))
}
