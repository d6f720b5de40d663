use num_rational::Ratio;
use num_traits::Signed;

use super::SpectraError;
use crate::exact::Polynomial;
use crate::scalar::Scalar;

/// Result of an exact open-disk root count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCount<T: Scalar> {
    pub radius: Ratio<T>,
    pub roots_strictly_inside: usize,
    pub degree: usize,
    /// True when the recursion never degenerated, which rules out roots on the circle.
    pub boundary_certified_clear: bool,
}

/// Counts the roots of the monic `p` with `|z| < radius`, with multiplicity.
///
/// `p(radius·z)` is scaled to integer coefficients and its roots in the unit
/// disk are counted with the Schur–Cohn transform
/// `Tf = f(0)·f − lead(f)·f*`. When `|f(0)| > |lead(f)|`, Rouché gives
/// `N(f) = N(Tf)`; when `|f(0)| < |lead(f)|`, `N(f) = deg f − N(Tf)`. A step
/// with `|f(0)| = |lead(f)|` is reported as [`SpectraError::DegenerateRecursion`].
/// Any root on the circle survives every transform, so a recursion that
/// reaches a constant certifies the circle root-free.
pub fn roots_in_open_disk<T: Scalar>(
    p: &Polynomial<T>,
    radius: &Ratio<T>,
) -> Result<DiskCount<T>, SpectraError> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic);
    }
    if !radius.is_positive() {
        return Err(SpectraError::NonPositiveRadius);
    }
    let degree = p.degree().expect("monic polynomials are nonzero");
    let scaled = scale_to_unit_circle(p, radius);
    let inside = count_in_unit_disk(scaled)?;
    Ok(DiskCount {
        radius: radius.clone(),
        roots_strictly_inside: inside,
        degree,
        boundary_certified_clear: true,
    })
}

/// Whether the monic `p` has a root with `|z| >= threshold`.
///
/// A degenerate recursion answers `true`: when every root lies strictly
/// inside the disk the transform never degenerates, so degeneracy already
/// implies a root on or outside the circle.
pub fn has_modulus_ge<T: Scalar>(
    p: &Polynomial<T>,
    threshold: &Ratio<T>,
) -> Result<bool, SpectraError> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic);
    }
    match roots_in_open_disk(p, threshold) {
        Ok(count) => Ok(count.roots_strictly_inside < count.degree),
        Err(SpectraError::DegenerateRecursion) => Ok(true),
        Err(e) => Err(e),
    }
}

/// Integer coefficients (constant term first) of `b^n · p((a/b)·z)`.
fn scale_to_unit_circle<T: Scalar>(p: &Polynomial<T>, radius: &Ratio<T>) -> Vec<T> {
    let n = p.degree().unwrap_or(0);
    let (a, b) = (radius.numer().clone(), radius.denom().clone());
    let mut a_pow = T::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let b_pow = num_traits::pow(b.clone(), n - k);
        out.push(p.coeff(k) * a_pow.clone() * b_pow);
        a_pow = a_pow * a.clone();
    }
    strip_content(out)
}

fn strip_content<T: Scalar>(mut f: Vec<T>) -> Vec<T> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    let g = f.iter().fold(T::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut f {
            *c = c.clone() / g.clone();
        }
    }
    f
}

fn count_in_unit_disk<T: Scalar>(f: Vec<T>) -> Result<usize, SpectraError> {
    let n = f.len() - 1;
    if n == 0 {
        return Ok(0);
    }
    let (f0, lead) = (f[0].clone(), f[n].clone());
    let (m0, ml) = (f0.abs(), lead.abs());
    if m0 == ml {
        return Err(SpectraError::DegenerateRecursion);
    }
    let transformed: Vec<T> = (0..=n)
        .map(|k| f0.clone() * f[k].clone() - lead.clone() * f[n - k].clone())
        .collect();
    let inner = count_in_unit_disk(strip_content(transformed))?;
    Ok(if m0 > ml { inner } else { n - inner })
}
