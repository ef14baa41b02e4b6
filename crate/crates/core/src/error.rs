//! Crate-wide error type.

use crate::word::GroupKind;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("kind mismatch: {left:?} vs {right:?}")]
    KindMismatch { left: GroupKind, right: GroupKind },

    #[error("letter {letter} illegal for {kind:?} word of rank {rank}")]
    IllegalLetter {
        kind: GroupKind,
        rank: usize,
        letter: String,
    },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("word does not lie in the domain of {morphism}")]
    DomainMismatch { morphism: String },

    #[error("word is not in the kernel: the sigma-image is nontrivial")]
    NotInKernel,

    #[error("exponent sum is {sum}, expected zero")]
    NonzeroExponentSum { sum: i64 },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("endomorphism image length budget of {budget} letters exceeded")]
    LengthBudget { budget: usize },

    #[error("strand budget of {budget} exceeded: word has {strands} strands")]
    StrandBudget { strands: usize, budget: usize },
}

impl Error {
    /// True for budget-style failures (the computation was cut off, the
    /// answer is not "no").
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::LengthBudget { .. } | Error::StrandBudget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
