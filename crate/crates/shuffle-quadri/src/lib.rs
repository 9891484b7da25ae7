//! Exact symbolic computation in the shuffle quadri-algebra on words.
//!
//! The tensor algebra over a finite alphabet carries, besides concatenation,
//! the commutative shuffle product. On nonempty words the shuffle splits
//! into four partial products (`↗ ↘ ↙ ↖`) according to where an
//! interleaving takes its first and last letters, and these four operations
//! satisfy a rich system of compatibilities among themselves, with the
//! half-products they generate (`≻ ≺ ∨ ∧`), and with concatenation and the
//! deconcatenation coproduct.
//!
//! This crate implements all of those operations twice — once by structural
//! recursion, once by direct enumeration of interleavings — with exact
//! big-integer coefficients, and ships a law checker that verifies every
//! identity exhaustively over finite universes of words:
//!
//! * [`word`]: letters, alphabets, words, canonical ordering, enumeration;
//! * [`combination`]: integer linear combinations of words and of
//!   elementary tensors, with bilinear extension;
//! * [`hopf`]: concatenation, both shuffle implementations, and the
//!   deconcatenation coproduct with its reduced variants;
//! * [`quadri`]: the four partial products, their unit action table, the
//!   derived half-products, and coproduct-driven sums;
//! * [`laws`]: the law catalog and the exhaustive checking engine.

pub mod combination;
pub mod error;
pub mod hopf;
pub mod laws;
pub mod quadri;
pub mod word;

pub use combination::{
    bilinear_extend, linear_extend, linear_extend_tensor, Combination, TensorCombination,
};
pub use error::AlgebraError;
pub use hopf::{
    concat, concat_comb, deconcat, deconcat_comb, deconcat_prime, deconcat_second, shuffle,
    shuffle_comb, shuffle_interleavings,
};
pub use laws::{
    catalog, check_law, run_suite, Counterexample, InstanceSpec, LawDef, LawId, LawKind,
    LawReport, SpecDomainError, Value,
};
pub use quadri::{
    quadri_interleavings, DerivedOp, PairOp, QuadriAlgebra, QuadriOp, UnitAction, UnitSide,
    UnitTable, UnitTableEntry,
};
pub use word::{words_up_to, Alphabet, Letter, Word, MAX_ALPHABET};
