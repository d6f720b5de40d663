//! Exact growth analysis for abelian-by-cyclic groups.
//!
//! The crate decides whether a split extension `Z^r ⋊_A Z` has polynomial or
//! uniform exponential growth, builds explicit pairs of words that generate
//! a free semigroup (with an exhaustive oracle to check them), and counts
//! Cayley balls of matrix groups and split extensions exactly.
//!
//! The algebra is generic over an exact integer [`Scalar`]; the aliases below
//! fix it to [`BigInt`], which is what the command-line tool uses.

pub mod exact;
pub mod groups;
pub mod growth;
pub mod scalar;
pub mod spectra;
pub mod witness;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;
pub use scalar::Scalar;

/// Arbitrary-precision rational, used for radii and thresholds.
pub type BigRational = Ratio<BigInt>;
pub type IntMatrix = exact::Matrix<BigInt>;
pub type IntPolynomial = exact::Polynomial<BigInt>;
pub type IntLattice = exact::Lattice<BigInt>;
pub type IntGroupElement = groups::GroupElement<BigInt>;
pub type IntGroupSpec = groups::GroupSpec<BigInt>;
pub type IntWitness = witness::FreeSemigroupWitness<BigInt>;
