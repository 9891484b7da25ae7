//! Integer linear combinations of words and of elementary tensors.
//!
//! [`Combination`] is a finitely supported map `Word -> BigInt` kept in
//! normal form: zero coefficients are never stored, and terms iterate in the
//! canonical word order. [`TensorCombination`] is the same for pairs of words
//! (elements of `H ⊗ H`). Coefficients are arbitrary-precision integers, so
//! every computation in the crate is exact.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value as Json};

use crate::error::AlgebraError;
use crate::word::{Alphabet, Word};

/// A finite integer linear combination of words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Combination {
    terms: BTreeMap<Word, BigInt>,
}

impl Combination {
    /// The zero combination.
    pub fn zero() -> Combination {
        Combination::default()
    }

    /// The unit `1`: the empty word with coefficient one.
    pub fn unit() -> Combination {
        Combination::word(Word::empty())
    }

    /// A single word with coefficient one.
    pub fn word(word: Word) -> Combination {
        let mut terms = BTreeMap::new();
        terms.insert(word, BigInt::one());
        Combination { terms }
    }

    /// Build from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, BigInt)>>(terms: I) -> Combination {
        let mut c = Combination::zero();
        for (word, coef) in terms {
            c.add_term(word, coef);
        }
        c
    }

    /// Add `coef · word` in place, keeping the normal form.
    pub fn add_term(&mut self, word: Word, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum of two combinations.
    pub fn plus(&self, other: &Combination) -> Combination {
        let mut out = self.clone();
        for (word, coef) in &other.terms {
            out.add_term(word.clone(), coef.clone());
        }
        out
    }

    /// Difference of two combinations.
    pub fn minus(&self, other: &Combination) -> Combination {
        let mut out = self.clone();
        for (word, coef) in &other.terms {
            out.add_term(word.clone(), -coef.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, scalar: &BigInt) -> Combination {
        if scalar.is_zero() {
            return Combination::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * scalar)).collect(),
        }
    }

    /// Whether this is the zero combination.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coefficient(&self, word: &Word) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients (the counit composed with the augmentation
    /// sends every word to 1, so this counts interleavings with multiplicity).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether the empty word appears with a nonzero coefficient.
    pub fn contains_unit(&self) -> bool {
        self.terms.contains_key(&Word::empty())
    }

    /// Apply a word-to-word map to every term (used for prepending and
    /// appending boundary letters in the quadri-operation recursions).
    pub fn map_words<F: FnMut(&Word) -> Word>(&self, mut f: F) -> Combination {
        Combination::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Render in canonical text form, e.g. `2*ab + ba - 1`.
    ///
    /// Terms appear in canonical word order. The empty word renders as its
    /// bare coefficient, unit coefficients are left implicit, and the zero
    /// combination renders as `0`. Output re-parses to an equal value under
    /// the expression grammar.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coef)) in self.terms.iter().enumerate() {
            let negative = coef.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = coef.abs();
            if word.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&alphabet.format_word(word));
            }
        }
        out
    }

    /// Canonical JSON form: `{"terms": [{"coef": "<int>", "word": "<letters>"}, ...]}`
    /// with terms in canonical word order and the empty word spelled `""`.
    pub fn to_json(&self, alphabet: &Alphabet) -> Json {
        let terms: Vec<Json> = self
            .terms
            .iter()
            .map(|(word, coef)| {
                json!({ "coef": coef.to_string(), "word": alphabet.letters_string(word) })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl Add for &Combination {
    type Output = Combination;
    fn add(self, rhs: &Combination) -> Combination {
        self.plus(rhs)
    }
}

impl Sub for &Combination {
    type Output = Combination;
    fn sub(self, rhs: &Combination) -> Combination {
        self.minus(rhs)
    }
}

impl Neg for &Combination {
    type Output = Combination;
    fn neg(self) -> Combination {
        self.scale(&BigInt::from(-1))
    }
}

/// Extend a bilinear operation on words to combinations:
/// `f(Σ aᵢ uᵢ, Σ bⱼ vⱼ) = Σ aᵢ bⱼ f(uᵢ, vⱼ)`.
///
/// The word-level operation may be partial (e.g. undefined on the unit
/// pair); the first error encountered is returned.
pub fn bilinear_extend<F>(
    mut op: F,
    x: &Combination,
    y: &Combination,
) -> Result<Combination, AlgebraError>
where
    F: FnMut(&Word, &Word) -> Result<Combination, AlgebraError>,
{
    let mut out = Combination::zero();
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            let product = op(u, v)?;
            let scalar = a * b;
            for (w, c) in product.terms() {
                out.add_term(w.clone(), c * &scalar);
            }
        }
    }
    Ok(out)
}

/// Extend a linear operation on words to combinations.
pub fn linear_extend<F>(mut op: F, x: &Combination) -> Result<Combination, AlgebraError>
where
    F: FnMut(&Word) -> Result<Combination, AlgebraError>,
{
    let mut out = Combination::zero();
    for (u, a) in x.terms() {
        let image = op(u)?;
        for (w, c) in image.terms() {
            out.add_term(w.clone(), c * a);
        }
    }
    Ok(out)
}

/// Extend a linear tensor-valued operation on words to combinations.
pub fn linear_extend_tensor<F>(mut op: F, x: &Combination) -> Result<TensorCombination, AlgebraError>
where
    F: FnMut(&Word) -> Result<TensorCombination, AlgebraError>,
{
    let mut out = TensorCombination::zero();
    for (u, a) in x.terms() {
        let image = op(u)?;
        for ((left, right), c) in image.terms() {
            out.add_term(left.clone(), right.clone(), c * a);
        }
    }
    Ok(out)
}

/// A finite integer linear combination of elementary tensors `u ⊗ v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorCombination {
    terms: BTreeMap<(Word, Word), BigInt>,
}

impl TensorCombination {
    /// The zero tensor combination.
    pub fn zero() -> TensorCombination {
        TensorCombination::default()
    }

    /// A single elementary tensor with coefficient one.
    pub fn pair(left: Word, right: Word) -> TensorCombination {
        let mut terms = BTreeMap::new();
        terms.insert((left, right), BigInt::one());
        TensorCombination { terms }
    }

    /// Build from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Word, BigInt)>>(terms: I) -> TensorCombination {
        let mut t = TensorCombination::zero();
        for (l, r, c) in terms {
            t.add_term(l, r, c);
        }
        t
    }

    /// Add `coef · (left ⊗ right)` in place, keeping the normal form.
    pub fn add_term(&mut self, left: Word, right: Word, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Outer product `x ⊗ y` of two combinations.
    pub fn tensor(x: &Combination, y: &Combination) -> TensorCombination {
        let mut out = TensorCombination::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                out.add_term(u.clone(), v.clone(), a * b);
            }
        }
        out
    }

    /// Sum of two tensor combinations.
    pub fn plus(&self, other: &TensorCombination) -> TensorCombination {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Difference of two tensor combinations.
    pub fn minus(&self, other: &TensorCombination) -> TensorCombination {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, scalar: &BigInt) -> TensorCombination {
        if scalar.is_zero() {
            return TensorCombination::zero();
        }
        TensorCombination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * scalar)).collect(),
        }
    }

    /// Whether this is the zero tensor combination.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (left word, then right word).
    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &BigInt)> {
        self.terms.iter()
    }

    /// Componentwise concatenation product of `H ⊗ H`:
    /// `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`, extended bilinearly.
    pub fn componentwise_concat(&self, other: &TensorCombination) -> TensorCombination {
        let mut out = TensorCombination::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.concat(l2), r1.concat(r2), c1 * c2);
            }
        }
        out
    }

    /// Whether the term `1 ⊗ 1` appears. Elements of the reduced tensor
    /// square `H⁺ ⊗̄ H⁺` must never contain it.
    pub fn contains_unit_unit(&self) -> bool {
        self.terms.contains_key(&(Word::empty(), Word::empty()))
    }

    /// Render in canonical text form, e.g. `1(x)ab + a(x)b`, with `(x)` as
    /// the tensor symbol.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((left, right), coef)) in self.terms.iter().enumerate() {
            let negative = coef.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = coef.abs();
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&alphabet.format_word(left));
            out.push_str("(x)");
            out.push_str(&alphabet.format_word(right));
        }
        out
    }

    /// Canonical JSON form:
    /// `{"terms": [{"coef": "<int>", "left": "<letters>", "right": "<letters>"}, ...]}`.
    pub fn to_json(&self, alphabet: &Alphabet) -> Json {
        let terms: Vec<Json> = self
            .terms
            .iter()
            .map(|((left, right), coef)| {
                json!({
                    "coef": coef.to_string(),
                    "left": alphabet.letters_string(left),
                    "right": alphabet.letters_string(right),
                })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl Add for &TensorCombination {
    type Output = TensorCombination;
    fn add(self, rhs: &TensorCombination) -> TensorCombination {
        self.plus(rhs)
    }
}

impl Sub for &TensorCombination {
    type Output = TensorCombination;
    fn sub(self, rhs: &TensorCombination) -> TensorCombination {
        self.minus(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphabet() -> Alphabet {
        Alphabet::latin(3).unwrap()
    }

    fn w(s: &str) -> Word {
        alphabet().word(s).unwrap()
    }

    fn comb(terms: &[(&str, i64)]) -> Combination {
        Combination::from_terms(terms.iter().map(|&(s, c)| (w(s), BigInt::from(c))))
    }

    #[test]
    fn addition_merges_and_cancels() {
        let x = comb(&[("ab", 1), ("ba", 2)]);
        let y = comb(&[("ba", -2), ("b", 5)]);
        let sum = x.plus(&y);
        assert_eq!(sum, comb(&[("ab", 1), ("b", 5)]));
        assert_eq!(sum.coefficient(&w("ba")), BigInt::zero());
        assert_eq!(x.plus(&Combination::zero()), x);
    }

    #[test]
    fn subtraction_of_self_is_zero() {
        let x = comb(&[("ab", 3), ("", 1)]);
        assert!(x.minus(&x).is_zero());
        assert_eq!((&x - &x), Combination::zero());
    }

    #[test]
    fn scaling_by_zero_clears_all_terms() {
        let x = comb(&[("ab", 1), ("ba", -4)]);
        assert!(x.scale(&BigInt::zero()).is_zero());
        assert_eq!(x.scale(&BigInt::from(2)), comb(&[("ab", 2), ("ba", -8)]));
        assert_eq!((-&x), x.scale(&BigInt::from(-1)));
    }

    #[test]
    fn normal_form_drops_zero_coefficients() {
        let x = Combination::from_terms(vec![
            (w("ab"), BigInt::from(2)),
            (w("ab"), BigInt::from(-2)),
            (w("a"), BigInt::from(1)),
        ]);
        assert_eq!(x.term_count(), 1);
        assert_eq!(x, comb(&[("a", 1)]));
    }

    #[test]
    fn bilinear_extension_distributes_over_sums() {
        // Concatenation of words, extended to combinations.
        let cat = |u: &Word, v: &Word| Ok(Combination::word(u.concat(v)));
        let x = comb(&[("a", 2), ("b", 1)]);
        let y = comb(&[("c", 1), ("", 1)]);
        let got = bilinear_extend(cat, &x, &y).unwrap();
        assert_eq!(got, comb(&[("ac", 2), ("a", 2), ("bc", 1), ("b", 1)]));
        // Zero on either side annihilates.
        assert!(bilinear_extend(cat, &Combination::zero(), &y).unwrap().is_zero());
        assert!(bilinear_extend(cat, &x, &Combination::zero()).unwrap().is_zero());
    }

    #[test]
    fn bilinear_extension_propagates_errors() {
        let partial = |u: &Word, v: &Word| {
            if u.is_empty() && v.is_empty() {
                Err(AlgebraError::UndefinedOnUnitPair)
            } else {
                Ok(Combination::word(u.concat(v)))
            }
        };
        let x = comb(&[("", 1), ("a", 1)]);
        assert_eq!(
            bilinear_extend(partial, &x, &x),
            Err(AlgebraError::UndefinedOnUnitPair)
        );
    }

    #[test]
    fn display_is_canonical() {
        let ab = alphabet();
        assert_eq!(Combination::zero().display(&ab), "0");
        assert_eq!(Combination::unit().display(&ab), "1");
        assert_eq!(comb(&[("ab", 1), ("ba", -1), ("", 3)]).display(&ab), "3 + ab - ba");
        assert_eq!(comb(&[("ab", -2)]).display(&ab), "-2*ab");
        assert_eq!(comb(&[("a", -1), ("b", 1)]).display(&ab), "-a + b");
    }

    #[test]
    fn json_shape_is_stable() {
        let ab = alphabet();
        let x = comb(&[("ab", 2), ("", 1)]);
        assert_eq!(
            x.to_json(&ab).to_string(),
            r#"{"terms":[{"coef":"1","word":""},{"coef":"2","word":"ab"}]}"#
        );
    }

    #[test]
    fn tensor_operations() {
        let ab = alphabet();
        let x = comb(&[("a", 1), ("b", 1)]);
        let y = comb(&[("c", 2)]);
        let t = TensorCombination::tensor(&x, &y);
        assert_eq!(t.display(&ab), "2*a(x)c + 2*b(x)c");
        assert!(t.minus(&t).is_zero());

        let unit_right = TensorCombination::pair(Word::empty(), w("c"));
        let shifted = TensorCombination::pair(w("a"), w("b")).componentwise_concat(&unit_right);
        assert_eq!(shifted, TensorCombination::pair(w("a"), w("bc")));

        assert!(TensorCombination::pair(Word::empty(), Word::empty()).contains_unit_unit());
        assert!(!t.contains_unit_unit());
    }

    #[test]
    fn tensor_json_shape_is_stable() {
        let ab = alphabet();
        let t = TensorCombination::pair(Word::empty(), w("ab"));
        assert_eq!(
            t.to_json(&ab).to_string(),
            r#"{"terms":[{"coef":"1","left":"","right":"ab"}]}"#
        );
    }
}
