//! Error types shared across the algebra operations.

use thiserror::Error;

/// Errors raised by word construction and by the partially defined
/// operations on the augmentation ideal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A character in a word literal does not belong to the configured alphabet.
    #[error("unknown letter `{0}` for this alphabet")]
    UnknownLetter(char),

    /// A quadri-algebra operation was applied to the pair (1, 1); the four
    /// partial products are defined on pairs of words that are not both empty.
    #[error("quadri-algebra operation undefined on the unit pair (1, 1)")]
    UndefinedOnUnitPair,

    /// The interleaving-based oracle only accepts nonempty words, since it
    /// classifies interleavings by the origin of their first and last letters.
    #[error("interleaving oracle requires nonempty words")]
    EmptyWordInOracle,

    /// The reduced coproducts are defined on nonempty words only.
    #[error("operation requires a nonempty word: the unit 1 is not in H+")]
    UnitNotInHPlus,

    /// An alphabet description was rejected (empty, too large, or with
    /// repeated or non-lowercase characters).
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
}

impl AlgebraError {
    /// Stable machine-readable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::UnknownLetter(_) => "UnknownLetter",
            AlgebraError::UndefinedOnUnitPair => "UndefinedOnUnitPair",
            AlgebraError::EmptyWordInOracle => "EmptyWordInOracle",
            AlgebraError::UnitNotInHPlus => "UnitNotInHPlus",
            AlgebraError::InvalidAlphabet(_) => "InvalidAlphabet",
        }
    }
}
