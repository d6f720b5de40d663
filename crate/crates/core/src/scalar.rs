//! Exact integer scalars.
//!
//! Every algebraic routine in the crate is written against [`Scalar`], so the
//! same code runs over arbitrary-precision integers ([`num_bigint::BigInt`],
//! the default used by the aliases at the crate root) and over fixed-width
//! machine integers (`i64`, `i128`) when the caller knows entries stay small.
//! Fixed-width scalars panic on overflow in debug builds; they never round.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Sign of an integer as it appears in canonical encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarSign {
    Negative,
    Zero,
    Positive,
}

impl ScalarSign {
    /// Byte used by canonical encodings.
    pub fn tag(self) -> u8 {
        match self {
            ScalarSign::Zero => 0,
            ScalarSign::Positive => 1,
            ScalarSign::Negative => 2,
        }
    }
}

/// An exact, signed integer type.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Sign and big-endian magnitude with no leading zero bytes (empty for zero).
    fn sign_magnitude_be(&self) -> (ScalarSign, Vec<u8>);

    /// Parses an optionally signed decimal string.
    fn parse_decimal(s: &str) -> Option<Self>;

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type holds i64 values")
    }
}

impl Scalar for BigInt {
    fn sign_magnitude_be(&self) -> (ScalarSign, Vec<u8>) {
        let (sign, bytes) = self.to_bytes_be();
        match sign {
            Sign::NoSign => (ScalarSign::Zero, Vec::new()),
            Sign::Plus => (ScalarSign::Positive, bytes),
            Sign::Minus => (ScalarSign::Negative, bytes),
        }
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

macro_rules! impl_scalar_for_primitive {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn sign_magnitude_be(&self) -> (ScalarSign, Vec<u8>) {
                let sign = match self.signum() {
                    0 => ScalarSign::Zero,
                    1 => ScalarSign::Positive,
                    _ => ScalarSign::Negative,
                };
                let bytes = self.unsigned_abs().to_be_bytes();
                let first = bytes.iter().position(|&b| b != 0).unwrap_or(bytes.len());
                (sign, bytes[first..].to_vec())
            }

            fn parse_decimal(s: &str) -> Option<Self> {
                s.trim().parse().ok()
            }
        }
    )*};
}

impl_scalar_for_primitive!(i64, i128);
