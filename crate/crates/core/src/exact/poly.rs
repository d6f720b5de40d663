use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ExactError;
use crate::scalar::Scalar;

/// Univariate polynomial with exact integer coefficients.
///
/// Coefficients are stored highest degree first; the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Division with remainder by a monic divisor.
pub fn poly_divide<T: Scalar>(
    p: &Polynomial<T>,
    q: &Polynomial<T>,
) -> Result<(Polynomial<T>, Polynomial<T>), ExactError> {
    p.div_rem(q)
}

impl<T: Scalar> Polynomial<T> {
    /// Builds a polynomial from coefficients given highest degree first.
    pub fn new(coeffs: Vec<T>) -> Self {
        let first = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len());
        let mut coeffs = coeffs;
        coeffs.drain(..first);
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64_exact(c)).collect())
    }

    /// Builds a polynomial from coefficients given constant term first.
    pub fn from_low_first(mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![T::one()],
        }
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[0] = T::one();
        Self { coeffs }
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![T::one(), -root])
    }

    pub fn coeffs_high_first(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_low_first(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.first()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(T::is_one)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        match self.degree() {
            Some(d) if i <= d => self.coeffs[d - i].clone(),
            _ => T::zero(),
        }
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |g, c| g.gcd(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with remainder by a monic polynomial.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let Some(dd) = divisor.degree() else {
            return Err(ExactError::DivisorZero);
        };
        if !divisor.is_monic() {
            return Err(ExactError::DivisorNotMonic);
        }
        let Some(pd) = self.degree().filter(|&pd| pd >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = Vec::with_capacity(pd - dd + 1);
        for i in 0..=pd - dd {
            let c = rem[i].clone();
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate().skip(1) {
                    if !d.is_zero() {
                        rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
                    }
                }
            }
            quot.push(c);
        }
        let remainder = rem.split_off(pd - dd + 1);
        Ok((Self::new(quot), Self::new(remainder)))
    }

    /// Whether `divisor` (monic) divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool, ExactError> {
        Ok(self.div_rem(divisor)?.1.is_zero())
    }

    /// Remainder of `self^e` modulo a monic `modulus`, by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self, ExactError> {
        let mut base = self.div_rem(modulus)?.1;
        let mut acc = Self::one().div_rem(modulus)?.1;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).div_rem(modulus)?.1;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).div_rem(modulus)?.1;
            }
        }
        Ok(acc)
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut low: Vec<T> = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            low[i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().rev().enumerate() {
            low[i] = low[i].clone() + c.clone();
        }
        Polynomial::from_low_first(low)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;

    type P = Polynomial<BigInt>;

    #[test]
    fn division_examples() {
        let (q, r) = poly_divide(&P::from_i64(&[1, -3, 1]), &P::from_i64(&[1, -1])).unwrap();
        assert_eq!(q, P::from_i64(&[1, -2]));
        assert_eq!(r, P::from_i64(&[-1]));

        let p = P::from_i64(&[1, 4, -7, 2]);
        let (q, r) = p.div_rem(&p).unwrap();
        assert_eq!((q, r), (P::one(), P::zero()));

        let (q, r) = P::from_i64(&[1, 0, 0, 0, -1])
            .div_rem(&P::from_i64(&[1, 0, 1]))
            .unwrap();
        assert_eq!((q, r), (P::from_i64(&[1, 0, -1]), P::zero()));
    }

    #[test]
    fn division_errors() {
        let p = P::from_i64(&[1, 2]);
        assert_eq!(p.div_rem(&P::zero()), Err(ExactError::DivisorZero));
        assert_eq!(
            p.div_rem(&P::from_i64(&[2, 1])),
            Err(ExactError::DivisorNotMonic)
        );
    }

    #[test]
    fn normalizes_and_displays() {
        let p = P::from_i64(&[0, 0, 1, -3, 1]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "x^2 - 3x + 1");
        assert_eq!(P::from_i64(&[-1, 0, 2]).to_string(), "-x^2 + 2");
        assert_eq!(P::from_i64(&[0]).degree(), None);
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn pow_mod_matches_direct_remainder() {
        let m = P::from_i64(&[1, -3, 1]);
        let x = P::monomial(1);
        let direct = x.pow(13).div_rem(&m).unwrap().1;
        assert_eq!(x.pow_mod(13, &m).unwrap(), direct);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = P> {
        prop::collection::vec(-1_000_000_i64..=1_000_000, 0..=max_deg + 1)
            .prop_map(|c| P::from_i64(&c))
    }

    fn monic_poly(max_deg: usize) -> impl Strategy<Value = P> {
        prop::collection::vec(-1_000_000_i64..=1_000_000, 0..=max_deg).prop_map(|mut c| {
            c.insert(0, 1);
            P::from_i64(&c)
        })
    }

    proptest! {
        #[test]
        fn division_round_trip(p in small_poly(8), q in monic_poly(8)) {
            let (quot, rem) = p.div_rem(&q).unwrap();
            prop_assert_eq!(&(&q * &quot) + &rem, p);
            prop_assert!(rem.degree().is_none_or(|d| d < q.degree().unwrap()));
        }
    }
}
