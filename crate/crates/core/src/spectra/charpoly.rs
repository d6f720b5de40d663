use num_rational::Ratio;
use num_traits::{One, Zero};

use super::SpectraError;
use crate::exact::{ExactError, Matrix, Polynomial};
use crate::scalar::Scalar;

/// `det(xI - A)`, computed exactly.
pub fn char_poly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>, SpectraError> {
    let (coeffs, _) = a.faddeev_leverrier()?;
    Ok(Polynomial::new(coeffs))
}

/// Monic generator of `{g : g(A)v = 0}`.
///
/// Found from the first linear dependency in the Krylov sequence
/// `v, Av, A²v, …`, solved over the rationals. The result divides the
/// characteristic polynomial, so its coefficients are integers. The zero
/// vector yields the constant polynomial 1.
pub fn annihilator_poly<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Result<Polynomial<T>, SpectraError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    let r = a.rows();
    if v.len() != r {
        return Err(ExactError::DimensionMismatch(format!(
            "vector of length {} for a {r}x{r} matrix",
            v.len()
        ))
        .into());
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(Polynomial::one());
    }

    // Each reduced row keeps its pivot, its reduced vector and the Krylov
    // combination that produced it.
    struct Reduced<T> {
        pivot: usize,
        vector: Vec<Ratio<T>>,
        combination: Vec<Ratio<T>>,
    }
    let mut reduced: Vec<Reduced<T>> = Vec::new();
    let mut krylov = v.to_vec();
    for k in 0..=r {
        let mut vector: Vec<Ratio<T>> = krylov.iter().cloned().map(Ratio::from_integer).collect();
        let mut combination = vec![Ratio::zero(); k + 1];
        combination[k] = Ratio::one();
        for row in &reduced {
            let f = vector[row.pivot].clone() / row.vector[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in vector.iter_mut().zip(&row.vector) {
                *x = x.clone() - f.clone() * y.clone();
            }
            for (x, y) in combination.iter_mut().zip(&row.combination) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        match vector.iter().position(|x| !x.is_zero()) {
            Some(pivot) => reduced.push(Reduced {
                pivot,
                vector,
                combination,
            }),
            None => {
                // combination · (v, Av, …, A^k v) = 0 with leading coefficient 1
                let mut coeffs = Vec::with_capacity(k + 1);
                for c in combination.iter().rev() {
                    if !c.is_integer() {
                        return Err(ExactError::DimensionMismatch(
                            "annihilator is not integral; matrix is not integral".into(),
                        )
                        .into());
                    }
                    coeffs.push(c.to_integer());
                }
                return Ok(Polynomial::new(coeffs));
            }
        }
        krylov = a.mul_vec(&krylov)?;
    }
    unreachable!("Krylov vectors in dimension {r} become dependent by step {r}")
}
