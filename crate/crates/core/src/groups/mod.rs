//! Group models, words over labeled generators, and Schreier generators of
//! finite-index subgroups.

mod element;
mod schreier;
mod spec;
mod word;

pub use element::{canonical_encode, GroupElement, GroupKind, LeftMultiplier};
pub use schreier::{finite_index_generators, CosetTable};
pub use spec::{GeneratingSet, Generator, GroupSpec};
pub use word::{is_valid_label, Letter, Word};

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid generator label `{0}`")]
    InvalidLabel(String),
    #[error("generating set is empty")]
    EmptyGeneratingSet,
    #[error("generator `{label}` is not unimodular (determinant {determinant})")]
    NotUnimodular { label: String, determinant: String },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("coset action is not transitive: {0}")]
    NotTransitive(String),
    #[error("invalid coset table: {0}")]
    InvalidTable(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
