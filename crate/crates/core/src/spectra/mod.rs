//! Exact spectral decisions for integer matrices.
//!
//! Everything is decided by exact integer arithmetic: the characteristic
//! polynomial by Faddeev–LeVerrier, the root-of-unity question by
//! cyclotomic division (Kronecker), and modulus thresholds by a Schur–Cohn
//! disk count on a rescaled polynomial.

mod charpoly;
mod kronecker;
mod schur_cohn;

pub use charpoly::{annihilator_poly, char_poly};
pub use kronecker::{cyclotomic, euler_phi, kronecker_all_roots_of_unity};
pub use schur_cohn::{has_modulus_ge, roots_in_open_disk, DiskCount};

use num_rational::Ratio;
use thiserror::Error;

use crate::exact::{ExactError, Matrix};
use crate::scalar::Scalar;

/// Default cap on the power searched by [`power_for_threshold`].
pub const DEFAULT_POWER_BUDGET: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("Schur-Cohn recursion degenerates: a root may lie on the circle")]
    DegenerateRecursion,
    #[error("every eigenvalue is a root of unity")]
    AllRootsOfUnity,
    #[error("no power up to {tested} reaches the threshold")]
    PowerBudgetExceeded { tested: u32 },
}

/// Summary of the spectrum of a single matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVerdict {
    pub all_roots_of_unity: bool,
    pub exists_modulus_ge_two: bool,
    /// Smallest power whose spectrum reaches modulus 2, when some root has modulus > 1.
    pub witness_power: Option<u32>,
}

pub fn spectral_verdict<T: Scalar>(a: &Matrix<T>) -> Result<SpectralVerdict, SpectraError> {
    let p = char_poly(a)?;
    let two = Ratio::from_integer(T::from_i64_exact(2));
    let all_roots_of_unity = kronecker_all_roots_of_unity(&p)?;
    if all_roots_of_unity {
        return Ok(SpectralVerdict {
            all_roots_of_unity,
            exists_modulus_ge_two: false,
            witness_power: None,
        });
    }
    Ok(SpectralVerdict {
        all_roots_of_unity,
        exists_modulus_ge_two: has_modulus_ge(&p, &two)?,
        witness_power: Some(power_for_threshold(a, &two, DEFAULT_POWER_BUDGET)?),
    })
}

/// Smallest `n <= n_max` such that `A^n` has an eigenvalue of modulus at least `threshold`.
pub fn power_for_threshold<T: Scalar>(
    a: &Matrix<T>,
    threshold: &Ratio<T>,
    n_max: u32,
) -> Result<u32, SpectraError> {
    if kronecker_all_roots_of_unity(&char_poly(a)?)? {
        return Err(SpectraError::AllRootsOfUnity);
    }
    let mut power = a.clone();
    for n in 1..=n_max {
        if has_modulus_ge(&char_poly(&power)?, threshold)? {
            return Ok(n);
        }
        power = power.mul(a)?;
    }
    Err(SpectraError::PowerBudgetExceeded { tested: n_max })
}

/// Whether every eigenvalue of the unimodular matrix `m` is a root of unity.
///
/// This inspects one matrix only. It is an advisory, per-element test and
/// says nothing about the joint action of a whole group.
pub fn spectrum_all_roots_of_unity<T: Scalar>(m: &Matrix<T>) -> Result<bool, SpectraError> {
    let det = m.determinant()?;
    if !det.abs().is_one() {
        return Err(ExactError::NotUnimodular {
            determinant: det.to_string(),
        }
        .into());
    }
    kronecker_all_roots_of_unity(&char_poly(m)?)
}
