//! Concatenation, shuffle product, and the deconcatenation coproduct.
//!
//! The shuffle product comes in two independent implementations:
//!
//! * [`shuffle`], the left-recursive form
//!   `au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v)` with `1 ⧢ w = w ⧢ 1 = w`;
//! * [`shuffle_interleavings`], which enumerates the interleavings directly
//!   by choosing the positions of the first word's letters.
//!
//! The enumeration form is the reference oracle: it is all but impossible to
//! get wrong, and every recursive implementation in the crate is tested
//! against it. Both are exposed so the checks never silently collapse into
//! comparing an implementation with itself.

use num_bigint::BigInt;
use num_traits::One;

use crate::combination::{bilinear_extend, Combination, TensorCombination};
use crate::error::AlgebraError;
use crate::word::Word;

/// Concatenation of two words (the associative product of the tensor
/// algebra, with the empty word as unit).
pub fn concat(u: &Word, v: &Word) -> Word {
    u.concat(v)
}

/// Concatenation extended bilinearly to combinations.
pub fn concat_comb(x: &Combination, y: &Combination) -> Combination {
    bilinear_extend(|u, v| Ok(Combination::word(u.concat(v))), x, y)
        .expect("concatenation is total")
}

/// Shuffle product by the left recursion
/// `au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v)`, `1 ⧢ w = w ⧢ 1 = w`.
pub fn shuffle(u: &Word, v: &Word) -> Combination {
    if u.is_empty() {
        return Combination::word(v.clone());
    }
    if v.is_empty() {
        return Combination::word(u.clone());
    }
    let a = u.first().expect("nonempty");
    let b = v.first().expect("nonempty");
    let left = shuffle(&u.without_first(), v).map_words(|w| w.prepend(a));
    let right = shuffle(u, &v.without_first()).map_words(|w| w.prepend(b));
    left.plus(&right)
}

/// Shuffle product extended bilinearly to combinations.
pub fn shuffle_comb(x: &Combination, y: &Combination) -> Combination {
    bilinear_extend(|u, v| Ok(shuffle(u, v)), x, y).expect("shuffle is total")
}

/// Visit every size-`choose` subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, choose: usize, mut visit: impl FnMut(&[usize])) {
    if choose > n {
        return;
    }
    let mut idx: Vec<usize> = (0..choose).collect();
    loop {
        visit(&idx);
        // Advance to the next subset: bump the rightmost index that can move.
        let mut i = choose;
        while i > 0 && idx[i - 1] == n - choose + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..choose {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visit every interleaving of `u` and `v` exactly once. Each interleaving
/// corresponds to a choice of the `|u|` positions (out of `|u| + |v|`) that
/// carry letters of `u`, both words keeping their internal order. The
/// callback receives the interleaved letters plus flags telling whether the
/// first and the last letter of the result came from `u`.
pub(crate) fn for_each_interleaving(
    u: &Word,
    v: &Word,
    mut visit: impl FnMut(&[crate::word::Letter], bool, bool),
) {
    let p = u.len();
    let n = p + v.len();
    let mut letters = Vec::with_capacity(n);
    for_each_subset(n, p, |positions| {
        letters.clear();
        let mut from_u = 0;
        let mut from_v = 0;
        for slot in 0..n {
            if from_u < p && positions[from_u] == slot {
                letters.push(u.letters()[from_u]);
                from_u += 1;
            } else {
                letters.push(v.letters()[from_v]);
                from_v += 1;
            }
        }
        let first_from_u = p > 0 && positions[0] == 0;
        let last_from_u = p > 0 && positions[p - 1] == n - 1;
        visit(&letters, first_from_u, last_from_u);
    });
}

/// Shuffle product by direct enumeration of interleavings.
///
/// This is the oracle implementation for the shuffle and everything derived
/// from it.
pub fn shuffle_interleavings(u: &Word, v: &Word) -> Combination {
    let mut out = Combination::zero();
    for_each_interleaving(u, v, |letters, _, _| {
        out.add_term(Word::from_letters(letters.to_vec()), BigInt::one());
    });
    out
}

/// Shuffle product by the mirror-image right recursion
/// `ua ⧢ vb = (u ⧢ vb)a + (ua ⧢ v)b`. Only used to cross-check the other
/// two implementations.
#[cfg(test)]
pub(crate) fn shuffle_right_recursive(u: &Word, v: &Word) -> Combination {
    if u.is_empty() {
        return Combination::word(v.clone());
    }
    if v.is_empty() {
        return Combination::word(u.clone());
    }
    let a = u.last().expect("nonempty");
    let b = v.last().expect("nonempty");
    let left = shuffle_right_recursive(&u.without_last(), v).map_words(|w| w.append(a));
    let right = shuffle_right_recursive(u, &v.without_last()).map_words(|w| w.append(b));
    left.plus(&right)
}

/// Deconcatenation coproduct `Δ(u) = Σ u¹ ⊗ u²` over all prefix/suffix
/// splits, including `1 ⊗ u` and `u ⊗ 1`. In particular `Δ(1) = 1 ⊗ 1`.
pub fn deconcat(u: &Word) -> TensorCombination {
    TensorCombination::from_terms(u.splits().map(|(l, r)| (l, r, BigInt::one())))
}

/// Deconcatenation extended linearly to combinations.
pub fn deconcat_comb(x: &Combination) -> TensorCombination {
    let mut out = TensorCombination::zero();
    for (w, c) in x.terms() {
        out = out.plus(&deconcat(w).scale(c));
    }
    out
}

/// Left-reduced coproduct `Δ'(u) = Δ(u) - u ⊗ 1`, defined on nonempty words.
/// Keeps the `1 ⊗ u` term; the right tensor factor of every term is nonempty.
pub fn deconcat_prime(u: &Word) -> Result<TensorCombination, AlgebraError> {
    if u.is_empty() {
        return Err(AlgebraError::UnitNotInHPlus);
    }
    Ok(TensorCombination::from_terms(
        u.splits().filter(|(_, r)| !r.is_empty()).map(|(l, r)| (l, r, BigInt::one())),
    ))
}

/// Right-reduced coproduct `Δ''(u) = Δ(u) - 1 ⊗ u`, defined on nonempty
/// words. Keeps the `u ⊗ 1` term; the left tensor factor of every term is
/// nonempty.
pub fn deconcat_second(u: &Word) -> Result<TensorCombination, AlgebraError> {
    if u.is_empty() {
        return Err(AlgebraError::UnitNotInHPlus);
    }
    Ok(TensorCombination::from_terms(
        u.splits().filter(|(l, _)| !l.is_empty()).map(|(l, r)| (l, r, BigInt::one())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w("ab"), &w("cd")), w("abcd"));
        assert_eq!(concat(&w("ab"), &Word::empty()), w("ab"));
        assert_eq!(concat(&Word::empty(), &Word::empty()), Word::empty());
    }

    #[test]
    fn shuffle_of_single_letters() {
        assert_eq!(shuffle(&w("a"), &w("b")), comb(&[("ab", 1), ("ba", 1)]));
        assert_eq!(shuffle(&w("a"), &w("a")), comb(&[("aa", 2)]));
    }

    #[test]
    fn shuffle_with_unit_is_identity() {
        assert_eq!(shuffle(&Word::empty(), &w("abc")), comb(&[("abc", 1)]));
        assert_eq!(shuffle(&w("abc"), &Word::empty()), comb(&[("abc", 1)]));
        assert_eq!(shuffle(&Word::empty(), &Word::empty()), Combination::unit());
    }

    // Frozen output of the interleaving enumeration for the standard
    // four-letter example; the recursive form must reproduce it.
    #[test]
    fn shuffle_ab_cd_has_six_interleavings() {
        let expected = comb(&[
            ("abcd", 1),
            ("acbd", 1),
            ("acdb", 1),
            ("cabd", 1),
            ("cadb", 1),
            ("cdab", 1),
        ]);
        assert_eq!(shuffle_interleavings(&w("ab"), &w("cd")), expected);
        assert_eq!(shuffle(&w("ab"), &w("cd")), expected);
    }

    #[test]
    fn shuffle_merges_equal_interleavings() {
        // ab ⧢ ab: C(4,2) = 6 interleavings but only 3 distinct words.
        let got = shuffle(&w("ab"), &w("ab"));
        assert_eq!(got, comb(&[("aabb", 4), ("abab", 2)]));
        assert_eq!(got.coefficient_sum(), BigInt::from(6));
    }

    #[test]
    fn all_three_shuffle_implementations_agree_exhaustively() {
        // Every pair of words over two letters with total length <= 6.
        let words = words_up_to(2, 4);
        for u in &words {
            for v in &words {
                if u.len() + v.len() > 6 {
                    continue;
                }
                let oracle = shuffle_interleavings(u, v);
                assert_eq!(shuffle(u, v), oracle, "left recursion vs oracle on {u} ⧢ {v}");
                assert_eq!(
                    shuffle_right_recursive(u, v),
                    oracle,
                    "right recursion vs oracle on {u} ⧢ {v}"
                );
            }
        }
    }

    #[test]
    fn deconcat_examples() {
        let got = deconcat(&w("abc"));
        let expected = TensorCombination::from_terms(vec![
            (Word::empty(), w("abc"), BigInt::one()),
            (w("a"), w("bc"), BigInt::one()),
            (w("ab"), w("c"), BigInt::one()),
            (w("abc"), Word::empty(), BigInt::one()),
        ]);
        assert_eq!(got, expected);
        assert_eq!(
            deconcat(&Word::empty()),
            TensorCombination::pair(Word::empty(), Word::empty())
        );
    }

    #[test]
    fn reduced_coproducts_drop_one_boundary_term() {
        let full = deconcat(&w("ab"));
        let prime = deconcat_prime(&w("ab")).unwrap();
        let second = deconcat_second(&w("ab")).unwrap();
        assert_eq!(
            prime,
            full.minus(&TensorCombination::pair(w("ab"), Word::empty()))
        );
        assert_eq!(
            second,
            full.minus(&TensorCombination::pair(Word::empty(), w("ab")))
        );
        // On a single letter both reduced coproducts have a single term.
        assert_eq!(
            deconcat_prime(&w("a")).unwrap(),
            TensorCombination::pair(Word::empty(), w("a"))
        );
        assert_eq!(
            deconcat_second(&w("a")).unwrap(),
            TensorCombination::pair(w("a"), Word::empty())
        );
    }

    #[test]
    fn reduced_coproducts_reject_the_unit() {
        assert_eq!(deconcat_prime(&Word::empty()), Err(AlgebraError::UnitNotInHPlus));
        assert_eq!(deconcat_second(&Word::empty()), Err(AlgebraError::UnitNotInHPlus));
    }

    #[test]
    fn reduced_coproducts_stay_out_of_the_unit_corner() {
        for u in words_up_to(2, 5) {
            if u.is_empty() {
                continue;
            }
            assert!(!deconcat_prime(&u).unwrap().contains_unit_unit());
            assert!(!deconcat_second(&u).unwrap().contains_unit_unit());
        }
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..3usize, 0..=max_len)
            .prop_map(|ixs| Word::from_letters(ixs.into_iter().map(crate::word::Letter::new).collect()))
    }

    proptest! {
        /// The number of interleavings (with multiplicity) is the binomial
        /// coefficient C(p+q, p).
        #[test]
        fn shuffle_coefficient_sum_is_binomial(u in arb_word(5), v in arb_word(5)) {
            let got = shuffle(&u, &v).coefficient_sum();
            let (p, q) = (u.len(), v.len());
            // Pascal's rule, independent of the shuffle code under test.
            let mut row = vec![BigInt::one()];
            for _ in 0..(p + q) {
                let mut next = vec![BigInt::one()];
                for i in 1..row.len() {
                    next.push(&row[i - 1] + &row[i]);
                }
                next.push(BigInt::one());
                row = next;
            }
            prop_assert_eq!(got, row[p].clone());
        }

        /// Shuffling is commutative.
        #[test]
        fn shuffle_is_commutative(u in arb_word(4), v in arb_word(4)) {
            prop_assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
        }

        /// Shuffling is associative.
        #[test]
        fn shuffle_is_associative(u in arb_word(3), v in arb_word(3), t in arb_word(3)) {
            let left = shuffle_comb(&shuffle(&u, &v), &Combination::word(t.clone()));
            let right = shuffle_comb(&Combination::word(u.clone()), &shuffle(&v, &t));
            prop_assert_eq!(left, right);
        }

        /// Every term of a shuffle has degree p + q (the product is graded).
        #[test]
        fn shuffle_is_graded(u in arb_word(5), v in arb_word(5)) {
            let n = u.len() + v.len();
            prop_assert!(shuffle(&u, &v).terms().all(|(w, _)| w.len() == n));
        }

        /// Recursive and enumerated shuffles agree on random words.
        #[test]
        fn recursion_matches_enumeration(u in arb_word(6), v in arb_word(6)) {
            prop_assert_eq!(shuffle(&u, &v), shuffle_interleavings(&u, &v));
        }

        /// The coproduct is coassociative: splitting the left component
        /// further and splitting the right component further give the same
        /// three-part decompositions.
        #[test]
        fn deconcat_is_coassociative(u in arb_word(6)) {
            use std::collections::BTreeMap;
            let mut left_route: BTreeMap<(Word, Word, Word), BigInt> = BTreeMap::new();
            let mut right_route = left_route.clone();
            for ((l, r), c) in deconcat(&u).terms() {
                for ((l1, l2), c1) in deconcat(l).terms() {
                    *left_route.entry((l1.clone(), l2.clone(), r.clone())).or_default() += c * c1;
                }
                for ((r1, r2), c2) in deconcat(r).terms() {
                    *right_route.entry((l.clone(), r1.clone(), r2.clone())).or_default() += c * c2;
                }
            }
            prop_assert_eq!(left_route, right_route);
        }
    }
}
