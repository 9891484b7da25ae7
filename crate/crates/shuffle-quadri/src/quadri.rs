//! The four quadri-algebra operations refining the shuffle product.
//!
//! Every interleaving of two nonempty words `u` and `v` is classified by
//! where its first and last letters come from, splitting the shuffle into
//! four partial products named after compass directions:
//!
//! | operation | first letter | last letter |
//! |-----------|--------------|-------------|
//! | `u ↗ v` (north-east) | from `v` | from `u` |
//! | `u ↘ v` (south-east) | from `v` | from `v` |
//! | `u ↙ v` (south-west) | from `u` | from `v` |
//! | `u ↖ v` (north-west) | from `u` | from `u` |
//!
//! so that `↗ + ↘ + ↙ + ↖ = ⧢` on pairs of nonempty words. The pairwise
//! sums are the derived half-products: `≻ = ↗ + ↘`, `≺ = ↖ + ↙`,
//! `∨ = ↘ + ↙`, `∧ = ↗ + ↖`, and `⋆` is the sum of all four.
//!
//! Two independent implementations are provided: a structural recursion on
//! the boundary letters ([`QuadriAlgebra::quadri`]) and a direct
//! classification of enumerated interleavings ([`quadri_interleavings`]),
//! which serves as the oracle.
//!
//! The operations are undefined on the pair `(1, 1)`; for mixed pairs with
//! exactly one empty word the products extend by the unit action table
//! `1 ↘ v = v`, `u ↖ 1 = u`, all other unit products zero ([`UnitTable`]).
//! The table can be deliberately corrupted to exercise failure reporting in
//! the law checker.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::combination::{bilinear_extend, Combination};
use crate::error::AlgebraError;
use crate::hopf::{concat_comb, shuffle};
use crate::word::Word;

/// One of the four partial products splitting the shuffle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadriOp {
    /// `↗`: first letter from the right operand, last letter from the left.
    NorthEast,
    /// `↘`: first and last letters from the right operand.
    SouthEast,
    /// `↙`: first letter from the left operand, last letter from the right.
    SouthWest,
    /// `↖`: first and last letters from the left operand.
    NorthWest,
}

impl QuadriOp {
    /// All four operations, in the conventional `↗ ↘ ↙ ↖` order.
    pub const ALL: [QuadriOp; 4] = [
        QuadriOp::NorthEast,
        QuadriOp::SouthEast,
        QuadriOp::SouthWest,
        QuadriOp::NorthWest,
    ];

    /// Short lowercase name used by the expression grammar.
    pub fn name(self) -> &'static str {
        match self {
            QuadriOp::NorthEast => "ne",
            QuadriOp::SouthEast => "se",
            QuadriOp::SouthWest => "sw",
            QuadriOp::NorthWest => "nw",
        }
    }

    /// Arrow glyph used in law statements.
    pub fn arrow(self) -> &'static str {
        match self {
            QuadriOp::NorthEast => "↗",
            QuadriOp::SouthEast => "↘",
            QuadriOp::SouthWest => "↙",
            QuadriOp::NorthWest => "↖",
        }
    }

    /// The operation computing `u op v` from `v op' u`: swapping the
    /// operands of a shuffle interleaving swaps the provenance of both
    /// boundary letters, exchanging `↗ ↔ ↙` and `↘ ↔ ↖`.
    pub fn swap_args(self) -> QuadriOp {
        match self {
            QuadriOp::NorthEast => QuadriOp::SouthWest,
            QuadriOp::SouthWest => QuadriOp::NorthEast,
            QuadriOp::SouthEast => QuadriOp::NorthWest,
            QuadriOp::NorthWest => QuadriOp::SouthEast,
        }
    }

    fn index(self) -> usize {
        match self {
            QuadriOp::NorthEast => 0,
            QuadriOp::SouthEast => 1,
            QuadriOp::SouthWest => 2,
            QuadriOp::NorthWest => 3,
        }
    }
}

/// A half-product or the full product, as a sum of quadri operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedOp {
    /// `≻ = ↗ + ↘` (first letter from the right operand).
    Succ,
    /// `≺ = ↖ + ↙` (first letter from the left operand).
    Prec,
    /// `∨ = ↘ + ↙` (last letter from the right operand).
    Vee,
    /// `∧ = ↗ + ↖` (last letter from the left operand).
    Wedge,
    /// `⋆ = ↗ + ↘ + ↙ + ↖`, the full shuffle on pairs other than `(1, 1)`.
    Star,
}

impl DerivedOp {
    /// All five derived operations.
    pub const ALL: [DerivedOp; 5] = [
        DerivedOp::Succ,
        DerivedOp::Prec,
        DerivedOp::Vee,
        DerivedOp::Wedge,
        DerivedOp::Star,
    ];

    /// Short lowercase name used by the expression grammar.
    pub fn name(self) -> &'static str {
        match self {
            DerivedOp::Succ => "succ",
            DerivedOp::Prec => "prec",
            DerivedOp::Vee => "vee",
            DerivedOp::Wedge => "wedge",
            DerivedOp::Star => "star",
        }
    }

    /// Glyph used in law statements.
    pub fn symbol(self) -> &'static str {
        match self {
            DerivedOp::Succ => "≻",
            DerivedOp::Prec => "≺",
            DerivedOp::Vee => "∨",
            DerivedOp::Wedge => "∧",
            DerivedOp::Star => "⋆",
        }
    }

    /// The quadri operations this derived operation sums.
    pub fn parts(self) -> &'static [QuadriOp] {
        match self {
            DerivedOp::Succ => &[QuadriOp::NorthEast, QuadriOp::SouthEast],
            DerivedOp::Prec => &[QuadriOp::NorthWest, QuadriOp::SouthWest],
            DerivedOp::Vee => &[QuadriOp::SouthEast, QuadriOp::SouthWest],
            DerivedOp::Wedge => &[QuadriOp::NorthEast, QuadriOp::NorthWest],
            DerivedOp::Star => &QuadriOp::ALL,
        }
    }
}

/// What a quadri operation does when exactly one operand is the empty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitAction {
    /// The product is zero.
    Zero,
    /// The product is the nonempty operand, unchanged.
    Keep,
}

/// Which operand of a unit product is the empty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSide {
    /// The left operand is `1`, as in `1 op v`.
    Left,
    /// The right operand is `1`, as in `u op 1`.
    Right,
}

/// One cell of the unit action table, e.g. "`se` with the unit on the left".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitTableEntry {
    pub op: QuadriOp,
    pub side: UnitSide,
}

impl fmt::Display for UnitTableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            UnitSide::Left => "left",
            UnitSide::Right => "right",
        };
        write!(f, "{}-{}", self.op.name(), side)
    }
}

impl FromStr for UnitTableEntry {
    type Err = String;

    /// Parse names like `se-left` or `nw-right`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (op_name, side_name) = s
            .split_once('-')
            .ok_or_else(|| format!("expected OP-SIDE, e.g. `se-left`, got `{s}`"))?;
        let op = QuadriOp::ALL
            .into_iter()
            .find(|op| op.name() == op_name)
            .ok_or_else(|| format!("unknown operation `{op_name}` (expected ne, se, sw, or nw)"))?;
        let side = match side_name {
            "left" => UnitSide::Left,
            "right" => UnitSide::Right,
            other => return Err(format!("unknown side `{other}` (expected left or right)")),
        };
        Ok(UnitTableEntry { op, side })
    }
}

/// The unit action table: how each quadri operation treats a single empty
/// operand. The standard table keeps the nonempty word exactly when the
/// boundary-letter classification forces it to survive on that side
/// (`1 ↘ v = v`, `u ↖ 1 = u`) and is zero in the six remaining cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitTable {
    left: [UnitAction; 4],
    right: [UnitAction; 4],
}

impl UnitTable {
    /// The standard table consistent with the interleaving classification.
    pub fn standard() -> UnitTable {
        let mut left = [UnitAction::Zero; 4];
        let mut right = [UnitAction::Zero; 4];
        left[QuadriOp::SouthEast.index()] = UnitAction::Keep;
        right[QuadriOp::NorthWest.index()] = UnitAction::Keep;
        UnitTable { left, right }
    }

    /// A copy of this table with one cell flipped between `Zero` and `Keep`.
    /// Used to fault-inject a wrong unit action and watch the law checker
    /// catch it.
    pub fn with_flipped(&self, entry: UnitTableEntry) -> UnitTable {
        let mut table = self.clone();
        let cell = match entry.side {
            UnitSide::Left => &mut table.left[entry.op.index()],
            UnitSide::Right => &mut table.right[entry.op.index()],
        };
        *cell = match *cell {
            UnitAction::Zero => UnitAction::Keep,
            UnitAction::Keep => UnitAction::Zero,
        };
        table
    }

    /// Action of `op` on `1 op v`.
    pub fn on_left_unit(&self, op: QuadriOp) -> UnitAction {
        self.left[op.index()]
    }

    /// Action of `op` on `u op 1`.
    pub fn on_right_unit(&self, op: QuadriOp) -> UnitAction {
        self.right[op.index()]
    }
}

impl Default for UnitTable {
    fn default() -> Self {
        UnitTable::standard()
    }
}

/// The quadri-algebra structure on combinations of words: the four partial
/// products with their unit action table, the derived half-products, and
/// coproduct-driven sums. A value of this type fixes the unit table; the
/// default is the standard one.
#[derive(Debug, Clone, Default)]
pub struct QuadriAlgebra {
    unit_table: UnitTable,
}

impl QuadriAlgebra {
    /// Algebra with the standard unit action table.
    pub fn new() -> QuadriAlgebra {
        QuadriAlgebra::default()
    }

    /// Algebra with an explicit (possibly corrupted) unit action table.
    pub fn with_unit_table(unit_table: UnitTable) -> QuadriAlgebra {
        QuadriAlgebra { unit_table }
    }

    /// The unit action table in use.
    pub fn unit_table(&self) -> &UnitTable {
        &self.unit_table
    }

    /// One quadri operation on basis words, by structural recursion on the
    /// boundary letters.
    ///
    /// Writing `u = a·w·b` and `v = c·θ·d` for words of length ≥ 2, the
    /// recursion pins the boundary letters demanded by the operation and
    /// shuffles what remains:
    ///
    /// * `u ↗ v = c (aw ⧢ θd) b`
    /// * `u ↘ v = c (awb ⧢ θ) d`
    /// * `u ↙ v = a (wb ⧢ cθ) d`
    /// * `u ↖ v = a (w ⧢ cθd) b`
    ///
    /// Single letters degenerate to fixing the one available boundary, and
    /// pairs with a single empty operand follow the unit table. The pair
    /// `(1, 1)` is undefined.
    pub fn quadri(&self, op: QuadriOp, u: &Word, v: &Word) -> Result<Combination, AlgebraError> {
        match (u.len(), v.len()) {
            (0, 0) => Err(AlgebraError::UndefinedOnUnitPair),
            (0, _) => Ok(match self.unit_table.on_left_unit(op) {
                UnitAction::Keep => Combination::word(v.clone()),
                UnitAction::Zero => Combination::zero(),
            }),
            (_, 0) => Ok(match self.unit_table.on_right_unit(op) {
                UnitAction::Keep => Combination::word(u.clone()),
                UnitAction::Zero => Combination::zero(),
            }),
            // Two single letters admit exactly two interleavings: `vu`
            // (first from v, last from u) and `uv` (first from u, last
            // from v). Both-boundaries-one-side operations need at least
            // two letters on that side.
            (1, 1) => Ok(match op {
                QuadriOp::NorthEast => Combination::word(v.concat(u)),
                QuadriOp::SouthWest => Combination::word(u.concat(v)),
                QuadriOp::SouthEast | QuadriOp::NorthWest => Combination::zero(),
            }),
            // A single letter against v = c·θ·d: the letter of u either
            // sits at a boundary or is shuffled strictly inside.
            (1, _) => {
                let c = v.first().expect("nonempty");
                let d = v.last().expect("nonempty");
                Ok(match op {
                    QuadriOp::NorthEast => Combination::word(v.concat(u)),
                    QuadriOp::SouthEast => {
                        shuffle(u, &v.interior()).map_words(|w| w.prepend(c).append(d))
                    }
                    QuadriOp::SouthWest => Combination::word(u.concat(v)),
                    QuadriOp::NorthWest => Combination::zero(),
                })
            }
            // Long left operand against a single letter: reduce to the
            // previous case through the operand swap symmetry.
            (_, 1) => self.quadri(op.swap_args(), v, u),
            (_, _) => {
                let a = u.first().expect("nonempty");
                let b = u.last().expect("nonempty");
                let c = v.first().expect("nonempty");
                let d = v.last().expect("nonempty");
                Ok(match op {
                    QuadriOp::NorthEast => shuffle(&u.without_last(), &v.without_first())
                        .map_words(|w| w.prepend(c).append(b)),
                    QuadriOp::SouthEast => {
                        shuffle(u, &v.interior()).map_words(|w| w.prepend(c).append(d))
                    }
                    QuadriOp::SouthWest => shuffle(&u.without_first(), &v.without_last())
                        .map_words(|w| w.prepend(a).append(d)),
                    QuadriOp::NorthWest => {
                        shuffle(&u.interior(), v).map_words(|w| w.prepend(a).append(b))
                    }
                })
            }
        }
    }

    /// Quadri operation extended bilinearly to combinations. Errors as soon
    /// as a `(1, 1)` pair of basis words is hit.
    pub fn quadri_comb(
        &self,
        op: QuadriOp,
        x: &Combination,
        y: &Combination,
    ) -> Result<Combination, AlgebraError> {
        bilinear_extend(|u, v| self.quadri(op, u, v), x, y)
    }

    /// Derived operation on basis words: the sum of its quadri parts.
    pub fn derived(&self, op: DerivedOp, u: &Word, v: &Word) -> Result<Combination, AlgebraError> {
        let mut out = Combination::zero();
        for &part in op.parts() {
            out = out.plus(&self.quadri(part, u, v)?);
        }
        Ok(out)
    }

    /// Derived operation extended bilinearly to combinations.
    pub fn derived_comb(
        &self,
        op: DerivedOp,
        x: &Combination,
        y: &Combination,
    ) -> Result<Combination, AlgebraError> {
        bilinear_extend(|u, v| self.derived(op, u, v), x, y)
    }

    /// Apply a pairing (quadri, derived, or the full shuffle) to basis
    /// words. The shuffle is total; the others reject the pair `(1, 1)`.
    pub fn pair_op(&self, op: PairOp, u: &Word, v: &Word) -> Result<Combination, AlgebraError> {
        match op {
            PairOp::Quadri(q) => self.quadri(q, u, v),
            PairOp::Derived(d) => self.derived(d, u, v),
            PairOp::Shuffle => Ok(shuffle(u, v)),
        }
    }

    /// Pairing extended bilinearly to combinations.
    pub fn pair_op_comb(
        &self,
        op: PairOp,
        x: &Combination,
        y: &Combination,
    ) -> Result<Combination, AlgebraError> {
        bilinear_extend(|u, v| self.pair_op(op, u, v), x, y)
    }

    /// The coproduct-driven sum `Σ_{u = u¹u²} (u¹ left v) · (u² right w)`,
    /// running over all deconcatenations of `u` (including the boundary
    /// splits `1 ⊗ u` and `u ⊗ 1`) and concatenating the two images.
    pub fn sweedler_sum(
        &self,
        left: PairOp,
        right: PairOp,
        u: &Word,
        v: &Word,
        w: &Word,
    ) -> Result<Combination, AlgebraError> {
        let mut out = Combination::zero();
        for (u1, u2) in u.splits() {
            let l = self.pair_op(left, &u1, v)?;
            let r = self.pair_op(right, &u2, w)?;
            out = out.plus(&concat_comb(&l, &r));
        }
        Ok(out)
    }
}

/// A binary operation usable inside coproduct-driven sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOp {
    /// One of the four partial products.
    Quadri(QuadriOp),
    /// One of the five derived products.
    Derived(DerivedOp),
    /// The full shuffle, total on all pairs.
    Shuffle,
}

/// Quadri operation by direct enumeration: classify every interleaving of
/// `u` and `v` by the provenance of its first and last letters and keep the
/// class selected by `op`.
///
/// This is the oracle implementation. It requires both words nonempty: the
/// classification reads the provenance of boundary letters, which do not
/// exist for the empty word.
pub fn quadri_interleavings(
    op: QuadriOp,
    u: &Word,
    v: &Word,
) -> Result<Combination, AlgebraError> {
    if u.is_empty() || v.is_empty() {
        return Err(AlgebraError::EmptyWordInOracle);
    }
    let mut out = Combination::zero();
    // Walk every interleaving the same way the shuffle oracle does and
    // filter on boundary provenance.
    crate::hopf::for_each_interleaving(u, v, |letters, first_from_u, last_from_u| {
        let keep = match op {
            QuadriOp::NorthEast => !first_from_u && last_from_u,
            QuadriOp::SouthEast => !first_from_u && !last_from_u,
            QuadriOp::SouthWest => first_from_u && !last_from_u,
            QuadriOp::NorthWest => first_from_u && last_from_u,
        };
        if keep {
            out.add_term(Word::from_letters(letters.to_vec()), BigInt::one());
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::shuffle_interleavings;
    use crate::word::{words_up_to, Alphabet};
    use proptest::prelude::*;

    fn alphabet() -> Alphabet {
        Alphabet::latin(4).unwrap()
    }

    fn w(s: &str) -> Word {
        alphabet().word(s).unwrap()
    }

    fn comb(terms: &[(&str, i64)]) -> Combination {
        Combination::from_terms(terms.iter().map(|&(s, c)| (w(s), BigInt::from(c))))
    }

    fn alg() -> QuadriAlgebra {
        QuadriAlgebra::new()
    }

    #[test]
    fn single_letter_products() {
        let alg = alg();
        assert_eq!(alg.quadri(QuadriOp::NorthEast, &w("a"), &w("b")).unwrap(), comb(&[("ba", 1)]));
        assert_eq!(alg.quadri(QuadriOp::SouthEast, &w("a"), &w("b")).unwrap(), Combination::zero());
        assert_eq!(alg.quadri(QuadriOp::SouthWest, &w("a"), &w("b")).unwrap(), comb(&[("ab", 1)]));
        assert_eq!(alg.quadri(QuadriOp::NorthWest, &w("a"), &w("b")).unwrap(), Combination::zero());
    }

    #[test]
    fn letter_against_longer_word() {
        let alg = alg();
        // Fixing both boundaries of bc leaves a single interior slot for a.
        assert_eq!(alg.quadri(QuadriOp::SouthEast, &w("a"), &w("bc")).unwrap(), comb(&[("bac", 1)]));
        assert_eq!(alg.quadri(QuadriOp::NorthEast, &w("a"), &w("bc")).unwrap(), comb(&[("bca", 1)]));
        assert_eq!(alg.quadri(QuadriOp::SouthWest, &w("a"), &w("bc")).unwrap(), comb(&[("abc", 1)]));
        // Both boundaries from a single letter is impossible.
        assert_eq!(alg.quadri(QuadriOp::NorthWest, &w("a"), &w("bcd")).unwrap(), Combination::zero());
        // Mirror case through the operand swap.
        assert_eq!(alg.quadri(QuadriOp::NorthWest, &w("bc"), &w("a")).unwrap(), comb(&[("bac", 1)]));
        assert_eq!(alg.quadri(QuadriOp::SouthEast, &w("bcd"), &w("a")).unwrap(), Combination::zero());
    }

    // Frozen oracle outputs for the standard four-letter example: the six
    // interleavings of ab and cd split 2 + 1 + 2 + 1 across the quadrants.
    #[test]
    fn quadrants_of_ab_cd() {
        let alg = alg();
        let cases: [(QuadriOp, &[(&str, i64)]); 4] = [
            (QuadriOp::NorthEast, &[("cadb", 1), ("cdab", 1)]),
            (QuadriOp::SouthEast, &[("cabd", 1)]),
            (QuadriOp::SouthWest, &[("abcd", 1), ("acbd", 1)]),
            (QuadriOp::NorthWest, &[("acdb", 1)]),
        ];
        for (op, expected) in cases {
            let expected = comb(expected);
            assert_eq!(quadri_interleavings(op, &w("ab"), &w("cd")).unwrap(), expected, "{op:?} oracle");
            assert_eq!(alg.quadri(op, &w("ab"), &w("cd")).unwrap(), expected, "{op:?} recursion");
        }
    }

    #[test]
    fn unit_pair_is_undefined() {
        let alg = alg();
        for op in QuadriOp::ALL {
            assert_eq!(
                alg.quadri(op, &Word::empty(), &Word::empty()),
                Err(AlgebraError::UndefinedOnUnitPair)
            );
        }
        for op in DerivedOp::ALL {
            assert_eq!(
                alg.derived(op, &Word::empty(), &Word::empty()),
                Err(AlgebraError::UndefinedOnUnitPair)
            );
        }
    }

    #[test]
    fn standard_unit_actions() {
        let alg = alg();
        let v = w("ab");
        let one = Word::empty();
        // 1 ↘ v = v and u ↖ 1 = u; the six other unit products vanish.
        assert_eq!(alg.quadri(QuadriOp::SouthEast, &one, &v).unwrap(), comb(&[("ab", 1)]));
        assert_eq!(alg.quadri(QuadriOp::NorthWest, &v, &one).unwrap(), comb(&[("ab", 1)]));
        for op in [QuadriOp::NorthEast, QuadriOp::SouthWest, QuadriOp::NorthWest] {
            assert_eq!(alg.quadri(op, &one, &v).unwrap(), Combination::zero(), "1 {} v", op.arrow());
        }
        for op in [QuadriOp::NorthEast, QuadriOp::SouthEast, QuadriOp::SouthWest] {
            assert_eq!(alg.quadri(op, &v, &one).unwrap(), Combination::zero(), "v {} 1", op.arrow());
        }
    }

    #[test]
    fn derived_unit_actions() {
        let alg = alg();
        let v = w("ab");
        let one = Word::empty();
        let v_comb = comb(&[("ab", 1)]);
        // 1 ≻ v = v ≺ 1 = v, 1 ∨ v = v ∧ 1 = v; the mirrored products vanish.
        assert_eq!(alg.derived(DerivedOp::Succ, &one, &v).unwrap(), v_comb);
        assert_eq!(alg.derived(DerivedOp::Prec, &v, &one).unwrap(), v_comb);
        assert_eq!(alg.derived(DerivedOp::Vee, &one, &v).unwrap(), v_comb);
        assert_eq!(alg.derived(DerivedOp::Wedge, &v, &one).unwrap(), v_comb);
        assert_eq!(alg.derived(DerivedOp::Succ, &v, &one).unwrap(), Combination::zero());
        assert_eq!(alg.derived(DerivedOp::Prec, &one, &v).unwrap(), Combination::zero());
        assert_eq!(alg.derived(DerivedOp::Vee, &v, &one).unwrap(), Combination::zero());
        assert_eq!(alg.derived(DerivedOp::Wedge, &one, &v).unwrap(), Combination::zero());
        // ⋆ agrees with the shuffle on unit pairs too.
        assert_eq!(alg.derived(DerivedOp::Star, &one, &v).unwrap(), v_comb);
        assert_eq!(alg.derived(DerivedOp::Star, &v, &one).unwrap(), v_comb);
    }

    #[test]
    fn derived_examples() {
        let alg = alg();
        assert_eq!(
            alg.derived(DerivedOp::Succ, &w("a"), &w("bc")).unwrap(),
            comb(&[("bac", 1), ("bca", 1)])
        );
        assert_eq!(alg.derived(DerivedOp::Prec, &w("a"), &w("bc")).unwrap(), comb(&[("abc", 1)]));
        assert_eq!(alg.derived(DerivedOp::Vee, &w("a"), &w("b")).unwrap(), comb(&[("ab", 1)]));
        assert_eq!(alg.derived(DerivedOp::Wedge, &w("a"), &w("b")).unwrap(), comb(&[("ba", 1)]));
        assert_eq!(
            alg.derived(DerivedOp::Star, &w("ab"), &w("cd")).unwrap(),
            shuffle(&w("ab"), &w("cd"))
        );
    }

    #[test]
    fn oracle_requires_nonempty_words() {
        for op in QuadriOp::ALL {
            assert_eq!(
                quadri_interleavings(op, &Word::empty(), &w("a")),
                Err(AlgebraError::EmptyWordInOracle)
            );
            assert_eq!(
                quadri_interleavings(op, &w("a"), &Word::empty()),
                Err(AlgebraError::EmptyWordInOracle)
            );
        }
    }

    #[test]
    fn recursion_matches_oracle_exhaustively() {
        let alg = alg();
        let words = words_up_to(2, 5);
        for u in &words {
            for v in &words {
                if u.is_empty() || v.is_empty() || u.len() + v.len() > 6 {
                    continue;
                }
                for op in QuadriOp::ALL {
                    assert_eq!(
                        alg.quadri(op, u, v).unwrap(),
                        quadri_interleavings(op, u, v).unwrap(),
                        "{u} {} {v}",
                        op.arrow()
                    );
                }
            }
        }
    }

    #[test]
    fn quadrants_partition_the_shuffle() {
        let alg = alg();
        let words = words_up_to(2, 4);
        for u in &words {
            for v in &words {
                if u.is_empty() || v.is_empty() || u.len() + v.len() > 6 {
                    continue;
                }
                let star = alg.derived(DerivedOp::Star, u, v).unwrap();
                assert_eq!(star, shuffle(u, v), "⋆ vs ⧢ on {u}, {v}");
            }
        }
    }

    #[test]
    fn operand_swap_symmetry() {
        let alg = alg();
        let words = words_up_to(2, 4);
        for u in &words {
            for v in &words {
                if (u.is_empty() && v.is_empty()) || u.len() + v.len() > 6 {
                    continue;
                }
                assert_eq!(
                    alg.quadri(QuadriOp::NorthEast, u, v).unwrap(),
                    alg.quadri(QuadriOp::SouthWest, v, u).unwrap()
                );
                assert_eq!(
                    alg.quadri(QuadriOp::SouthEast, u, v).unwrap(),
                    alg.quadri(QuadriOp::NorthWest, v, u).unwrap()
                );
            }
        }
    }

    #[test]
    fn sweedler_sum_example() {
        // a ↗ (b·c) = Σ (a¹ ↘ b) · (a² ∧ c) over the splits 1·a and a·1:
        // (1 ↘ b)(a ∧ c) + (a ↘ b)(1 ∧ c) = b·ca + 0 = bca.
        let alg = alg();
        let got = alg
            .sweedler_sum(
                PairOp::Quadri(QuadriOp::SouthEast),
                PairOp::Derived(DerivedOp::Wedge),
                &w("a"),
                &w("b"),
                &w("c"),
            )
            .unwrap();
        assert_eq!(got, comb(&[("bca", 1)]));
        assert_eq!(got, alg.quadri(QuadriOp::NorthEast, &w("a"), &w("bc")).unwrap());
    }

    #[test]
    fn corrupted_unit_table_changes_unit_products() {
        let entry: UnitTableEntry = "se-left".parse().unwrap();
        assert_eq!(entry.to_string(), "se-left");
        let bad = QuadriAlgebra::with_unit_table(UnitTable::standard().with_flipped(entry));
        // The good table sends 1 ↘ v to v; the flipped one to zero, which
        // breaks the quadrant decomposition of the shuffle on unit pairs.
        assert_eq!(bad.quadri(QuadriOp::SouthEast, &Word::empty(), &w("a")).unwrap(), Combination::zero());
        assert_ne!(
            bad.derived(DerivedOp::Star, &Word::empty(), &w("a")).unwrap(),
            shuffle(&Word::empty(), &w("a"))
        );
    }

    #[test]
    fn unit_table_entry_parsing_rejects_garbage() {
        assert!("se-left".parse::<UnitTableEntry>().is_ok());
        assert!("zz-left".parse::<UnitTableEntry>().is_err());
        assert!("se-up".parse::<UnitTableEntry>().is_err());
        assert!("seleft".parse::<UnitTableEntry>().is_err());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..3usize, 1..=max_len)
            .prop_map(|ixs| Word::from_letters(ixs.into_iter().map(crate::word::Letter::new).collect()))
    }

    proptest! {
        /// The recursion agrees with the interleaving oracle on random words.
        #[test]
        fn recursion_matches_oracle(u in arb_word(5), v in arb_word(5)) {
            let alg = QuadriAlgebra::new();
            for op in QuadriOp::ALL {
                prop_assert_eq!(
                    alg.quadri(op, &u, &v).unwrap(),
                    quadri_interleavings(op, &u, &v).unwrap()
                );
            }
        }

        /// The four quadrants sum to the shuffle and are graded.
        #[test]
        fn quadrants_partition_and_grade(u in arb_word(5), v in arb_word(5)) {
            let alg = QuadriAlgebra::new();
            let mut total = Combination::zero();
            let n = u.len() + v.len();
            for op in QuadriOp::ALL {
                let part = alg.quadri(op, &u, &v).unwrap();
                prop_assert!(part.terms().all(|(t, _)| t.len() == n));
                total = total.plus(&part);
            }
            prop_assert_eq!(total, shuffle_interleavings(&u, &v));
        }
    }
}
