//! Letters, alphabets, and words.
//!
//! A [`Word`] is a finite (possibly empty) sequence of [`Letter`]s and is a
//! basis element of the tensor algebra over the free module spanned by the
//! alphabet. The empty word acts as the unit `1` of concatenation. Words are
//! ordered by length first and lexicographically within a length, which is
//! the canonical order used everywhere (term maps, enumeration, reports).

use std::cmp::Ordering;
use std::fmt;

use crate::error::AlgebraError;

/// Maximum number of letters an [`Alphabet`] may hold (`a` through `z`).
pub const MAX_ALPHABET: usize = 26;

/// A letter, identified by its index into the owning alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    /// Letter with the given alphabet index. Indices at or beyond
    /// [`MAX_ALPHABET`] are rejected at alphabet construction time, so this
    /// only asserts in debug builds.
    pub fn new(index: usize) -> Letter {
        debug_assert!(index < MAX_ALPHABET);
        Letter(index as u8)
    }

    /// Index of this letter within its alphabet.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A named, ordered set of distinct lowercase letters.
///
/// Alphabets give letters their printable names. All structural operations
/// work on indices, so the same word can be rendered under any alphabet large
/// enough to contain its letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<char>,
}

impl Alphabet {
    /// The first `size` lowercase latin letters `a, b, c, ...`.
    pub fn latin(size: usize) -> Result<Alphabet, AlgebraError> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(AlgebraError::InvalidAlphabet(format!(
                "size {size} out of range 1..={MAX_ALPHABET}"
            )));
        }
        Ok(Alphabet {
            names: (0..size).map(|i| (b'a' + i as u8) as char).collect(),
        })
    }

    /// Alphabet with explicitly named letters, e.g. `"xyz"`. Names must be
    /// distinct ASCII lowercase characters; this keeps word literals
    /// unambiguous in the expression grammar.
    pub fn from_chars(names: &str) -> Result<Alphabet, AlgebraError> {
        let names: Vec<char> = names.chars().collect();
        if names.is_empty() || names.len() > MAX_ALPHABET {
            return Err(AlgebraError::InvalidAlphabet(format!(
                "need between 1 and {MAX_ALPHABET} letters, got {}",
                names.len()
            )));
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(AlgebraError::InvalidAlphabet(format!(
                    "letter `{c}` is not ASCII lowercase"
                )));
            }
            if names[..i].contains(&c) {
                return Err(AlgebraError::InvalidAlphabet(format!("repeated letter `{c}`")));
            }
        }
        Ok(Alphabet { names })
    }

    /// Number of letters.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Look up a letter by its printable name.
    pub fn letter(&self, name: char) -> Result<Letter, AlgebraError> {
        self.names
            .iter()
            .position(|&c| c == name)
            .map(Letter::new)
            .ok_or(AlgebraError::UnknownLetter(name))
    }

    /// Printable name of a letter. Panics if the letter is outside this
    /// alphabet; enumeration and parsing only ever produce in-range letters.
    pub fn name(&self, letter: Letter) -> char {
        self.names[letter.index()]
    }

    /// Parse a word literal: one character per letter, with the empty string
    /// denoting the empty word.
    pub fn word(&self, s: &str) -> Result<Word, AlgebraError> {
        s.chars().map(|c| self.letter(c)).collect::<Result<Vec<_>, _>>().map(Word::from_letters)
    }

    /// Render a word under this alphabet. The empty word renders as `1`.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            "1".to_string()
        } else {
            word.letters().iter().map(|&l| self.name(l)).collect()
        }
    }

    /// Render a word as a bare letter string (empty word renders as `""`),
    /// the form used in JSON reports.
    pub fn letters_string(&self, word: &Word) -> String {
        word.letters().iter().map(|&l| self.name(l)).collect()
    }
}

/// A basis word of the tensor algebra: a finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word, the unit of concatenation.
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    /// Word made of the given letters.
    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// One-letter word.
    pub fn single(letter: Letter) -> Word {
        Word { letters: vec![letter] }
    }

    /// Number of letters (the grading degree).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether this is the empty word `1`.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The underlying letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// First letter, if any.
    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// Last letter, if any.
    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Word with `letter` in front: `l · self`.
    pub fn prepend(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }

    /// Word with `letter` at the end: `self · l`.
    pub fn append(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(letter);
        Word { letters }
    }

    /// Word with the first letter removed. Panics on the empty word.
    pub fn without_first(&self) -> Word {
        Word { letters: self.letters[1..].to_vec() }
    }

    /// Word with the last letter removed. Panics on the empty word.
    pub fn without_last(&self) -> Word {
        Word { letters: self.letters[..self.len() - 1].to_vec() }
    }

    /// Word with both the first and last letters removed (the `θ` of a
    /// factorization `c θ d`). Panics on words of length < 2.
    pub fn interior(&self) -> Word {
        Word { letters: self.letters[1..self.len() - 1].to_vec() }
    }

    /// The prefix/suffix split at position `i`, for `0 <= i <= len`.
    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (
            Word { letters: self.letters[..i].to_vec() },
            Word { letters: self.letters[i..].to_vec() },
        )
    }

    /// All `len + 1` prefix/suffix splits, in prefix-length order. This is
    /// exactly the support of the deconcatenation coproduct.
    pub fn splits(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(|i| self.split_at(i))
    }
}

/// Canonical order: by length, then lexicographically by letter indices.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Debug-friendly rendering under the latin alphabet (`1` for the empty word).
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.letters {
            debug_assert!(l.index() < MAX_ALPHABET);
            write!(f, "{}", (b'a' + l.index() as u8) as char)?;
        }
        Ok(())
    }
}

/// All words over the first `alphabet_size` letters with length at most
/// `max_len`, in canonical (length, then lex) order.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    assert!((1..=MAX_ALPHABET).contains(&alphabet_size));
    let mut all = vec![Word::empty()];
    let mut current = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(current.len() * alphabet_size);
        for w in &current {
            for i in 0..alphabet_size {
                let mut letters = w.letters().to_vec();
                letters.push(Letter::new(i));
                next.push(Word::from_letters(letters));
            }
        }
        all.extend(next.iter().cloned());
        current = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn latin(k: usize) -> Alphabet {
        Alphabet::latin(k).unwrap()
    }

    #[test]
    fn word_parsing_round_trips() {
        let ab = latin(2);
        let w = ab.word("abba").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(ab.format_word(&w), "abba");
        assert_eq!(ab.format_word(&Word::empty()), "1");
        assert_eq!(ab.word("").unwrap(), Word::empty());
    }

    #[test]
    fn unknown_letter_is_rejected() {
        let ab = latin(2);
        assert_eq!(ab.word("abz"), Err(AlgebraError::UnknownLetter('z')));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::latin(0).is_err());
        assert!(Alphabet::latin(27).is_err());
        assert!(Alphabet::from_chars("xyx").is_err());
        assert!(Alphabet::from_chars("aB").is_err());
        assert_eq!(Alphabet::from_chars("xyz").unwrap().size(), 3);
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let ab = latin(2);
        let parse = |s: &str| ab.word(s).unwrap();
        let mut words = [parse("ba"), parse("b"), parse("aa"), Word::empty(), parse("a")];
        words.sort();
        let rendered: Vec<String> = words.iter().map(|w| ab.format_word(w)).collect();
        assert_eq!(rendered, vec!["1", "a", "b", "aa", "ba"]);
    }

    #[test]
    fn concat_and_factorization_helpers() {
        let ab = latin(2);
        let u = ab.word("ab").unwrap();
        let v = ab.word("ba").unwrap();
        assert_eq!(ab.format_word(&u.concat(&v)), "abba");
        assert_eq!(u.concat(&Word::empty()), u);
        assert_eq!(Word::empty().concat(&v), v);
        assert_eq!(ab.format_word(&u.without_first()), "b");
        assert_eq!(ab.format_word(&u.without_last()), "a");
        assert_eq!(ab.word("abba").unwrap().interior(), ab.word("bb").unwrap());
    }

    #[test]
    fn splits_enumerate_all_prefix_suffix_pairs() {
        let ab = latin(2);
        let w = ab.word("ab").unwrap();
        let splits: Vec<(String, String)> = w
            .splits()
            .map(|(l, r)| (ab.format_word(&l), ab.format_word(&r)))
            .collect();
        assert_eq!(
            splits,
            vec![
                ("1".to_string(), "ab".to_string()),
                ("a".to_string(), "b".to_string()),
                ("ab".to_string(), "1".to_string()),
            ]
        );
        assert_eq!(Word::empty().splits().count(), 1);
    }

    #[test]
    fn words_up_to_is_complete_and_canonically_ordered() {
        let words = words_up_to(2, 3);
        // 1 + 2 + 4 + 8 words of lengths 0..=3.
        assert_eq!(words.len(), 15);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(words.windows(2).all(|w| w[0] != w[1]));
    }
}
