//! The law catalog and the exhaustive checking engine.
//!
//! Each [`LawDef`] in the catalog is one equation family over words: a list
//! of left/right side pairs evaluated on every instance drawn from a finite
//! universe (an [`InstanceSpec`]). Instances enumerate in a deterministic
//! order — slot by slot, words ordered by length then lexicographically —
//! so checker output is reproducible byte for byte.
//!
//! Three kinds of laws exist:
//!
//! * identities, which must hold on every enumerated instance and fail with
//!   the first counterexample found;
//! * a counterexample search (`shuffle_module_algebra_negative`), an
//!   inequality that *passes* when a witness instance is found — it pins
//!   down that the shuffle does **not** distribute over concatenation
//!   through the coproduct the way the half-products do;
//! * a worked example checked on one pinned instance and validated against
//!   the interleaving enumeration oracle.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::combination::{linear_extend_tensor, Combination, TensorCombination};
use crate::error::AlgebraError;
use crate::hopf::{
    concat, concat_comb, deconcat, deconcat_comb, deconcat_prime, deconcat_second, shuffle,
    shuffle_interleavings,
};
use crate::quadri::{quadri_interleavings, DerivedOp, PairOp, QuadriAlgebra, QuadriOp};
use crate::word::{words_up_to, Alphabet, Letter, Word, MAX_ALPHABET};

const NE: PairOp = PairOp::Quadri(QuadriOp::NorthEast);
const SE: PairOp = PairOp::Quadri(QuadriOp::SouthEast);
const SW: PairOp = PairOp::Quadri(QuadriOp::SouthWest);
const NW: PairOp = PairOp::Quadri(QuadriOp::NorthWest);
const SUCC: PairOp = PairOp::Derived(DerivedOp::Succ);
const PREC: PairOp = PairOp::Derived(DerivedOp::Prec);
const VEE: PairOp = PairOp::Derived(DerivedOp::Vee);
const WEDGE: PairOp = PairOp::Derived(DerivedOp::Wedge);
const STAR: PairOp = PairOp::Derived(DerivedOp::Star);
const SH: PairOp = PairOp::Shuffle;

/// One side of a checked equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// A linear combination of words.
    Combination(Combination),
    /// A linear combination of elementary tensors.
    Tensor(TensorCombination),
    /// A bare integer (used for coefficient-count checks).
    Integer(BigInt),
}

impl Value {
    /// Canonical text rendering.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self {
            Value::Combination(c) => c.display(alphabet),
            Value::Tensor(t) => t.display(alphabet),
            Value::Integer(n) => n.to_string(),
        }
    }

    /// Canonical JSON rendering.
    pub fn to_json(&self, alphabet: &Alphabet) -> Json {
        match self {
            Value::Combination(c) => c.to_json(alphabet),
            Value::Tensor(t) => t.to_json(alphabet),
            Value::Integer(n) => json!({ "integer": n.to_string() }),
        }
    }
}

/// A failing (or, for the search law, succeeding) instance: the input words
/// together with the two unequal sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// The instantiated slot words, in slot order.
    pub inputs: Vec<Word>,
    /// Index of the equation within the law (laws may bundle several).
    pub equation: usize,
    /// Left side value on these inputs.
    pub lhs: Value,
    /// Right side value on these inputs.
    pub rhs: Value,
}

impl Counterexample {
    fn to_json(&self, alphabet: &Alphabet) -> Json {
        let inputs: Vec<Json> =
            self.inputs.iter().map(|w| json!(alphabet.letters_string(w))).collect();
        json!({
            "inputs": inputs,
            "equation": self.equation,
            "lhs": self.lhs.to_json(alphabet),
            "rhs": self.rhs.to_json(alphabet),
        })
    }

    /// Human-readable one-line rendering.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        let inputs: Vec<String> = self.inputs.iter().map(|w| alphabet.format_word(w)).collect();
        format!(
            "inputs ({}), equation {}: {} != {}",
            inputs.join(", "),
            self.equation,
            self.lhs.display(alphabet),
            self.rhs.display(alphabet),
        )
    }
}

/// How a law is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawKind {
    /// Every instance must make all equation pairs equal.
    Identity,
    /// The law passes when some instance makes the two sides differ.
    CounterexampleSearch,
    /// A single pinned instance, validated against the enumeration oracle.
    WorkedExample,
}

type EvalFn = fn(&QuadriAlgebra, &[Word]) -> Result<Vec<(Value, Value)>, AlgebraError>;
type FilterFn = fn(&[Word]) -> bool;

/// A catalog entry: name, human-readable statement, instance domain, and
/// the evaluator producing the equation sides.
pub struct LawDef {
    /// Stable identifier accepted by `from_name` and the CLI.
    pub name: &'static str,
    /// The equation(s), in mathematical notation.
    pub statement: &'static str,
    /// Number of word slots (2 or 3).
    pub arity: usize,
    /// Whether each slot admits the empty word.
    pub unit_slots: &'static [bool],
    /// Identity, counterexample search, or worked example.
    pub kind: LawKind,
    /// Extra definedness constraint on instances (e.g. adjacent slots must
    /// not both be the empty word).
    filter: Option<FilterFn>,
    /// Evaluate all equation sides on one instance.
    eval: EvalFn,
    /// Fixed annotation copied into every report for this law.
    note: Option<&'static str>,
}

/// Identifier of a law in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LawId(usize);

impl LawId {
    /// All laws, in catalog order.
    pub fn all() -> impl Iterator<Item = LawId> {
        (0..catalog().len()).map(LawId)
    }

    /// Look up a law by its stable name.
    pub fn from_name(name: &str) -> Option<LawId> {
        catalog().iter().position(|def| def.name == name).map(LawId)
    }

    /// The catalog entry.
    pub fn def(self) -> &'static LawDef {
        &catalog()[self.0]
    }

    /// Stable name.
    pub fn name(self) -> &'static str {
        self.def().name
    }

    /// Position in the catalog (reports aggregate in this order).
    pub fn index(self) -> usize {
        self.0
    }

    /// Evaluate the law's equation sides on explicit input words (one word
    /// per slot). This is what makes reported counterexamples re-checkable.
    pub fn evaluate(
        self,
        alg: &QuadriAlgebra,
        inputs: &[Word],
    ) -> Result<Vec<(Value, Value)>, AlgebraError> {
        assert_eq!(inputs.len(), self.def().arity, "wrong number of inputs for {}", self.name());
        (self.def().eval)(alg, inputs)
    }
}

/// A finite universe of instances for one law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    /// Number of letters available (1 ..= 26).
    pub alphabet_size: usize,
    /// Upper bound on the summed length of all slot words.
    pub max_total_length: usize,
    /// Number of word slots; must match the law's arity.
    pub arity: usize,
    /// Whether each slot may receive the empty word; must not exceed what
    /// the law's domain allows.
    pub allow_unit_slots: Vec<bool>,
}

impl InstanceSpec {
    /// The natural (widest) universe for a law at the given size bounds.
    pub fn for_law(law: LawId, alphabet_size: usize, max_total_length: usize) -> InstanceSpec {
        let def = law.def();
        InstanceSpec {
            alphabet_size,
            max_total_length,
            arity: def.arity,
            allow_unit_slots: def.unit_slots.to_vec(),
        }
    }

    fn validate_for(&self, def: &LawDef) -> Result<(), SpecDomainError> {
        if self.alphabet_size == 0 || self.alphabet_size > MAX_ALPHABET {
            return Err(SpecDomainError::AlphabetSize(self.alphabet_size));
        }
        if self.arity != def.arity {
            return Err(SpecDomainError::ArityMismatch {
                law: def.name,
                expected: def.arity,
                got: self.arity,
            });
        }
        if self.allow_unit_slots.len() != self.arity {
            return Err(SpecDomainError::MalformedSpec(format!(
                "{} unit-slot flags for arity {}",
                self.allow_unit_slots.len(),
                self.arity
            )));
        }
        for (slot, (&spec_allows, &law_allows)) in
            self.allow_unit_slots.iter().zip(def.unit_slots).enumerate()
        {
            if spec_allows && !law_allows {
                return Err(SpecDomainError::UnitNotAllowed { law: def.name, slot });
            }
        }
        Ok(())
    }
}

/// An instance spec that violates a law's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecDomainError {
    /// Alphabet size outside `1..=26`.
    #[error("alphabet size {0} out of range 1..=26")]
    AlphabetSize(usize),
    /// The spec's arity differs from the law's.
    #[error("law `{law}` takes {expected} operands, the instance spec declares {got}")]
    ArityMismatch { law: &'static str, expected: usize, got: usize },
    /// The spec admits the empty word in a slot the law restricts to
    /// nonempty words.
    #[error("law `{law}` requires a nonempty word in slot {slot}, but the spec allows the unit there")]
    UnitNotAllowed { law: &'static str, slot: usize },
    /// Internally inconsistent spec.
    #[error("malformed instance spec: {0}")]
    MalformedSpec(String),
}

/// Outcome of checking one law over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    /// Which law was checked.
    pub law: LawId,
    /// Number of instances evaluated (enumeration stops at the first
    /// counterexample or witness).
    pub instances_checked: u64,
    /// Whether the law held (or, for the search law, whether a witness was
    /// found).
    pub passed: bool,
    /// First failing instance of an identity law.
    pub counterexample: Option<Counterexample>,
    /// First witness of the counterexample-search law. Kept separate from
    /// `counterexample` so that a passing report never carries one.
    pub witness: Option<Counterexample>,
    /// Extra context (fixed annotations, or why a search failed).
    pub note: Option<String>,
    /// Wall-clock time spent checking.
    pub elapsed: Duration,
}

impl LawReport {
    /// Canonical JSON rendering. Everything except the trailing `ms` field
    /// is deterministic for identical inputs.
    pub fn to_json(&self) -> Json {
        let alphabet = report_alphabet();
        let mut obj = serde_json::Map::new();
        obj.insert("law".into(), json!(self.law.name()));
        obj.insert("instances".into(), json!(self.instances_checked));
        obj.insert("passed".into(), json!(self.passed));
        obj.insert(
            "counterexample".into(),
            match &self.counterexample {
                Some(c) => c.to_json(&alphabet),
                None => Json::Null,
            },
        );
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json(&alphabet));
        }
        if let Some(n) = &self.note {
            obj.insert("note".into(), json!(n));
        }
        obj.insert("ms".into(), json!(self.elapsed.as_millis() as u64));
        Json::Object(obj)
    }

    /// One-line text rendering for suite output.
    pub fn display_line(&self) -> String {
        let alphabet = report_alphabet();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} ({} instances, {} ms)",
            self.law.name(),
            self.instances_checked,
            self.elapsed.as_millis()
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!("\n  counterexample: {}", c.display(&alphabet)));
        }
        if let Some(w) = &self.witness {
            line.push_str(&format!("\n  witness: {}", w.display(&alphabet)));
        }
        if let Some(n) = &self.note {
            line.push_str(&format!("\n  note: {n}"));
        }
        line
    }
}

/// Reports always render under the full lowercase alphabet: enumerated
/// letters are a prefix of it, so the names agree with any smaller universe.
fn report_alphabet() -> Alphabet {
    Alphabet::latin(MAX_ALPHABET).expect("26 letters is a valid alphabet")
}

/// Check one law over one universe.
///
/// Enumeration is exhaustive and deterministic; identity laws stop at the
/// first counterexample, the search law stops at the first witness. A spec
/// that violates the law's domain (wrong arity, empty word admitted into a
/// slot the law restricts) is rejected as [`SpecDomainError`] rather than
/// surfacing mid-run operation errors.
pub fn check_law(
    alg: &QuadriAlgebra,
    law: LawId,
    spec: &InstanceSpec,
) -> Result<LawReport, SpecDomainError> {
    let def = law.def();
    spec.validate_for(def)?;
    let start = Instant::now();

    let mut instances_checked = 0u64;
    let mut counterexample = None;
    let mut witness = None;

    for_each_instance(def, spec, |inputs| {
        let sides = (def.eval)(alg, inputs)
            .expect("law evaluation is total on instances within the validated domain");
        instances_checked += 1;
        match def.kind {
            LawKind::CounterexampleSearch => {
                let (lhs, rhs) = &sides[0];
                if lhs != rhs {
                    witness = Some(Counterexample {
                        inputs: inputs.to_vec(),
                        equation: 0,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    });
                    return false;
                }
            }
            LawKind::Identity | LawKind::WorkedExample => {
                for (equation, (lhs, rhs)) in sides.iter().enumerate() {
                    if lhs != rhs {
                        counterexample = Some(Counterexample {
                            inputs: inputs.to_vec(),
                            equation,
                            lhs: lhs.clone(),
                            rhs: rhs.clone(),
                        });
                        return false;
                    }
                }
            }
        }
        true
    });

    let passed = match def.kind {
        LawKind::CounterexampleSearch => witness.is_some(),
        _ => counterexample.is_none(),
    };
    let note = match def.kind {
        LawKind::CounterexampleSearch if !passed => Some(
            "no witness found in this universe; the inequality needs total length >= 3".to_string(),
        ),
        _ => def.note.map(String::from),
    };
    Ok(LawReport {
        law,
        instances_checked,
        passed,
        counterexample,
        witness,
        note,
        elapsed: start.elapsed(),
    })
}

/// Run laws over the natural universe derived from `(alphabet_size,
/// max_total_length)`, optionally fanning out across `jobs` worker threads.
/// Reports come back in catalog order regardless of completion order.
pub fn run_suite(
    alg: &QuadriAlgebra,
    alphabet_size: usize,
    max_total_length: usize,
    laws: &[LawId],
    jobs: usize,
) -> Vec<LawReport> {
    assert!(
        (1..=MAX_ALPHABET).contains(&alphabet_size),
        "alphabet size must be in 1..=26"
    );
    let workers = jobs.clamp(1, laws.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<LawReport>>> = laws.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= laws.len() {
                    break;
                }
                let spec = InstanceSpec::for_law(laws[i], alphabet_size, max_total_length);
                let report = check_law(alg, laws[i], &spec)
                    .expect("specs derived from the law's own domain are valid");
                *slots[i].lock().expect("worker panicked") = Some(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("worker panicked").expect("every law was run"))
        .collect()
}

/// Call `visit` on every instance of the law's domain within the spec, in
/// deterministic order (slot by slot, words by length then lex). `visit`
/// returns `false` to stop early. The worked example has a single pinned
/// instance independent of the universe.
fn for_each_instance(def: &LawDef, spec: &InstanceSpec, mut visit: impl FnMut(&[Word]) -> bool) {
    if def.kind == LawKind::WorkedExample {
        visit(&worked_instance());
        return;
    }
    let words = words_up_to(spec.alphabet_size, spec.max_total_length);
    let max = spec.max_total_length;
    let admissible = |slot: usize, w: &Word| !w.is_empty() || spec.allow_unit_slots[slot];
    match def.arity {
        2 => {
            for u in &words {
                if !admissible(0, u) {
                    continue;
                }
                for v in &words {
                    if u.len() + v.len() > max {
                        break; // words are sorted by length
                    }
                    if !admissible(1, v) {
                        continue;
                    }
                    let inputs = [u.clone(), v.clone()];
                    if def.filter.is_none_or(|f| f(&inputs)) && !visit(&inputs) {
                        return;
                    }
                }
            }
        }
        3 => {
            for u in &words {
                if !admissible(0, u) {
                    continue;
                }
                for v in &words {
                    if u.len() + v.len() > max {
                        break;
                    }
                    if !admissible(1, v) {
                        continue;
                    }
                    for w in &words {
                        if u.len() + v.len() + w.len() > max {
                            break;
                        }
                        if !admissible(2, w) {
                            continue;
                        }
                        let inputs = [u.clone(), v.clone(), w.clone()];
                        if def.filter.is_none_or(|f| f(&inputs)) && !visit(&inputs) {
                            return;
                        }
                    }
                }
            }
        }
        other => unreachable!("no law has arity {other}"),
    }
}

/// The pinned instance of the worked example: two two-letter words and one
/// single letter, all letters distinct.
fn worked_instance() -> Vec<Word> {
    let l = Letter::new;
    vec![
        Word::from_letters(vec![l(0), l(1)]), // ab
        Word::from_letters(vec![l(2), l(3)]), // cd
        Word::single(l(4)),                   // e
    ]
}

// ---------------------------------------------------------------------------
// Evaluation helpers shared by the catalog entries.
// ---------------------------------------------------------------------------

fn cw(w: &Word) -> Combination {
    Combination::word(w.clone())
}

fn vc(c: Combination) -> Value {
    Value::Combination(c)
}

fn vt(t: TensorCombination) -> Value {
    Value::Tensor(t)
}

fn two(ws: &[Word]) -> (&Word, &Word) {
    (&ws[0], &ws[1])
}

fn three(ws: &[Word]) -> (&Word, &Word, &Word) {
    (&ws[0], &ws[1], &ws[2])
}

/// Adjacent slots must not both be the empty word (the pairings `x·y` and
/// `y·z` appearing in the nested laws are undefined on `(1, 1)`).
fn adjacent_slots_pairable(ws: &[Word]) -> bool {
    !(ws[0].is_empty() && ws[1].is_empty()) && !(ws[1].is_empty() && ws[2].is_empty())
}

/// At least one slot is a nonempty word (the reduced triple tensor domain).
fn not_all_units(ws: &[Word]) -> bool {
    ws.iter().any(|w| !w.is_empty())
}

/// One nested-equation pair `(x inner_left y) outer_left z  =  x outer_right
/// (y inner_right z)`, the shape shared by the quadri axioms and both
/// dendriform axiom families. `ops` reads as
/// `(inner_left, outer_left, outer_right, inner_right)`.
fn nested_pair(
    alg: &QuadriAlgebra,
    ops: (PairOp, PairOp, PairOp, PairOp),
    x: &Word,
    y: &Word,
    z: &Word,
) -> Result<(Value, Value), AlgebraError> {
    let (inner_left, outer_left, outer_right, inner_right) = ops;
    let lhs = alg.pair_op_comb(outer_left, &alg.pair_op(inner_left, x, y)?, &cw(z))?;
    let rhs = alg.pair_op_comb(outer_right, &cw(x), &alg.pair_op(inner_right, y, z)?)?;
    Ok((vc(lhs), vc(rhs)))
}

/// `u op (v·w)` against the coproduct-driven sum `Σ (u¹ left v)·(u² right w)`.
fn split_rule_pair(
    alg: &QuadriAlgebra,
    op: PairOp,
    left: PairOp,
    right: PairOp,
    u: &Word,
    v: &Word,
    w: &Word,
) -> Result<(Value, Value), AlgebraError> {
    let lhs = alg.pair_op(op, u, &concat(v, w))?;
    let rhs = alg.sweedler_sum(left, right, u, v, w)?;
    Ok((vc(lhs), vc(rhs)))
}

/// Apply `op` to a pair drawn from the reduced tensor square: the pair
/// `(1, 1)` stands for the adjoined unit slot and maps to the unit
/// combination instead of erroring.
fn reduced_pair(
    alg: &QuadriAlgebra,
    op: PairOp,
    a: &Word,
    b: &Word,
) -> Result<Combination, AlgebraError> {
    if a.is_empty() && b.is_empty() {
        Ok(Combination::unit())
    } else {
        alg.pair_op(op, a, b)
    }
}

// ---------------------------------------------------------------------------
// Catalog evaluators.
// ---------------------------------------------------------------------------

fn eval_dendriform_horizontal(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (x, y, z) = three(ws);
    Ok(vec![
        nested_pair(alg, (PREC, PREC, PREC, STAR), x, y, z)?,
        nested_pair(alg, (SUCC, PREC, SUCC, PREC), x, y, z)?,
        nested_pair(alg, (STAR, SUCC, SUCC, SUCC), x, y, z)?,
    ])
}

fn eval_dendriform_vertical(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (x, y, z) = three(ws);
    Ok(vec![
        nested_pair(alg, (WEDGE, WEDGE, WEDGE, STAR), x, y, z)?,
        nested_pair(alg, (VEE, WEDGE, VEE, WEDGE), x, y, z)?,
        nested_pair(alg, (STAR, VEE, VEE, VEE), x, y, z)?,
    ])
}

macro_rules! axiom_eval {
    ($name:ident, $il:expr, $ol:expr, $or:expr, $ir:expr) => {
        fn $name(alg: &QuadriAlgebra, ws: &[Word]) -> Result<Vec<(Value, Value)>, AlgebraError> {
            let (x, y, z) = three(ws);
            Ok(vec![nested_pair(alg, ($il, $ol, $or, $ir), x, y, z)?])
        }
    };
}

// The nine axioms, indexed row-column in the conventional 3×3 layout.
axiom_eval!(eval_axiom_11, NW, NW, NW, STAR);
axiom_eval!(eval_axiom_12, NE, NW, NE, PREC);
axiom_eval!(eval_axiom_13, WEDGE, NE, NE, SUCC);
axiom_eval!(eval_axiom_21, SW, NW, SW, WEDGE);
axiom_eval!(eval_axiom_22, SE, NW, SE, NW);
axiom_eval!(eval_axiom_23, VEE, NE, SE, NE);
axiom_eval!(eval_axiom_31, PREC, SW, SW, VEE);
axiom_eval!(eval_axiom_32, SUCC, SW, SE, SW);
axiom_eval!(eval_axiom_33, STAR, SE, SE, SE);

fn eval_star_associative_equals_shuffle(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (x, y, z) = three(ws);
    let star_xy = alg.pair_op(STAR, x, y)?;
    let star_yz = alg.pair_op(STAR, y, z)?;
    let assoc_left = alg.pair_op_comb(STAR, &star_xy, &cw(z))?;
    let assoc_right = alg.pair_op_comb(STAR, &cw(x), &star_yz)?;
    Ok(vec![
        (vc(star_xy), vc(shuffle(x, y))),
        (vc(assoc_left), vc(assoc_right)),
    ])
}

fn eval_quadri_commutativity(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v) = two(ws);
    Ok(vec![
        (
            vc(alg.quadri(QuadriOp::NorthEast, u, v)?),
            vc(alg.quadri(QuadriOp::SouthWest, v, u)?),
        ),
        (
            vc(alg.quadri(QuadriOp::SouthEast, u, v)?),
            vc(alg.quadri(QuadriOp::NorthWest, v, u)?),
        ),
    ])
}

macro_rules! recursion_vs_enumeration_eval {
    ($name:ident, $op:expr) => {
        fn $name(alg: &QuadriAlgebra, ws: &[Word]) -> Result<Vec<(Value, Value)>, AlgebraError> {
            let (u, v) = two(ws);
            Ok(vec![(
                vc(alg.quadri($op, u, v)?),
                vc(quadri_interleavings($op, u, v)?),
            )])
        }
    };
}

recursion_vs_enumeration_eval!(eval_recursion_ne, QuadriOp::NorthEast);
recursion_vs_enumeration_eval!(eval_recursion_se, QuadriOp::SouthEast);
recursion_vs_enumeration_eval!(eval_recursion_sw, QuadriOp::SouthWest);
recursion_vs_enumeration_eval!(eval_recursion_nw, QuadriOp::NorthWest);

macro_rules! split_rule_eval {
    ($name:ident, $op:expr, $left:expr, $right:expr) => {
        fn $name(alg: &QuadriAlgebra, ws: &[Word]) -> Result<Vec<(Value, Value)>, AlgebraError> {
            let (u, v, w) = three(ws);
            Ok(vec![split_rule_pair(alg, $op, $left, $right, u, v, w)?])
        }
    };
}

// How each operation applied to a concatenation v·w decomposes through the
// deconcatenation splits of the left operand.
split_rule_eval!(eval_split_ne_a, NE, SE, WEDGE);
split_rule_eval!(eval_split_ne_b, NE, SUCC, NE);
split_rule_eval!(eval_split_se_a, SE, SE, VEE);
split_rule_eval!(eval_split_se_b, SE, SUCC, SE);
split_rule_eval!(eval_split_sw_a, SW, SW, VEE);
split_rule_eval!(eval_split_sw_b, SW, PREC, SE);
split_rule_eval!(eval_split_nw_a, NW, SW, WEDGE);
split_rule_eval!(eval_split_nw_b, NW, PREC, NE);
split_rule_eval!(eval_split_wedge, WEDGE, VEE, WEDGE);
split_rule_eval!(eval_split_prec, PREC, PREC, SUCC);
split_rule_eval!(eval_split_vee, VEE, VEE, VEE);
split_rule_eval!(eval_split_succ, SUCC, SUCC, SUCC);
split_rule_eval!(eval_split_shuffle_a, SH, VEE, SH);
split_rule_eval!(eval_split_shuffle_b, SH, SH, SUCC);

fn eval_left_action_vee(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    let lhs = alg.pair_op_comb(VEE, &cw(u), &reduced_pair(alg, VEE, v, w)?)?;
    let rhs = alg.pair_op_comb(VEE, &reduced_pair(alg, SH, u, v)?, &cw(w))?;
    Ok(vec![(vc(lhs), vc(rhs))])
}

fn eval_right_action_wedge(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    let lhs = alg.pair_op_comb(WEDGE, &reduced_pair(alg, WEDGE, u, v)?, &cw(w))?;
    let rhs = alg.pair_op_comb(WEDGE, &cw(u), &reduced_pair(alg, SH, v, w)?)?;
    Ok(vec![(vc(lhs), vc(rhs))])
}

fn eval_left_action_succ(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    let lhs = alg.pair_op_comb(SUCC, &cw(u), &reduced_pair(alg, SUCC, v, w)?)?;
    let rhs = alg.pair_op_comb(SUCC, &reduced_pair(alg, SH, u, v)?, &cw(w))?;
    Ok(vec![(vc(lhs), vc(rhs))])
}

fn eval_right_action_prec(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    let lhs = alg.pair_op_comb(PREC, &reduced_pair(alg, PREC, u, v)?, &cw(w))?;
    let rhs = alg.pair_op_comb(PREC, &cw(u), &reduced_pair(alg, SH, v, w)?)?;
    Ok(vec![(vc(lhs), vc(rhs))])
}

/// Module-algebra form: same identity as the corresponding split rule but
/// computed through the tensor coproduct machinery rather than word splits,
/// so the two catalog entries exercise different code paths.
fn module_algebra_sides(
    alg: &QuadriAlgebra,
    op: PairOp,
    u: &Word,
    v: &Word,
    w: &Word,
) -> Result<(Value, Value), AlgebraError> {
    let lhs = alg.pair_op(op, u, &concat(v, w))?;
    let mut rhs = Combination::zero();
    for ((u1, u2), c) in deconcat(u).terms() {
        let left = alg.pair_op(op, u1, v)?;
        let right = alg.pair_op(op, u2, w)?;
        rhs = rhs.plus(&concat_comb(&left, &right).scale(c));
    }
    Ok((vc(lhs), vc(rhs)))
}

fn eval_module_algebra_vee(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    Ok(vec![module_algebra_sides(alg, VEE, u, v, w)?])
}

fn eval_module_algebra_succ(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    Ok(vec![module_algebra_sides(alg, SUCC, u, v, w)?])
}

fn eval_delta_prime_vee(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v) = two(ws);
    // Δ' applied to every (nonempty) term of u ∨ v.
    let lhs = linear_extend_tensor(deconcat_prime, &alg.derived(DerivedOp::Vee, u, v)?)?;
    // Σ (u¹ ⧢ v¹) ⊗ (u² ∨ v²) over splits with (u², v²) ≠ (1, 1).
    let mut rhs = TensorCombination::zero();
    for (u1, u2) in u.splits() {
        for (v1, v2) in v.splits() {
            if u2.is_empty() && v2.is_empty() {
                continue;
            }
            let right = alg.derived(DerivedOp::Vee, &u2, &v2)?;
            rhs = rhs.plus(&TensorCombination::tensor(&shuffle(&u1, &v1), &right));
        }
    }
    Ok(vec![(vt(lhs), vt(rhs))])
}

fn eval_delta_second_prec(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v) = two(ws);
    // Δ'' applied to every (nonempty) term of u ≺ v.
    let lhs = linear_extend_tensor(deconcat_second, &alg.derived(DerivedOp::Prec, u, v)?)?;
    // Σ (u¹ ≺ v¹) ⊗ (u² ⧢ v²) over splits with (u¹, v¹) ≠ (1, 1).
    let mut rhs = TensorCombination::zero();
    for (u1, u2) in u.splits() {
        for (v1, v2) in v.splits() {
            if u1.is_empty() && v1.is_empty() {
                continue;
            }
            let left = alg.derived(DerivedOp::Prec, &u1, &v1)?;
            rhs = rhs.plus(&TensorCombination::tensor(&left, &shuffle(&u2, &v2)));
        }
    }
    Ok(vec![(vt(lhs), vt(rhs))])
}

fn eval_infinitesimal_bialgebra(
    _alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v) = two(ws);
    let lhs = deconcat(&concat(u, v));
    // (Δu)(1 ⊗ v) − u ⊗ v + (u ⊗ 1)(Δv), products in H ⊗ H componentwise.
    let term1 =
        deconcat(u).componentwise_concat(&TensorCombination::pair(Word::empty(), v.clone()));
    let term2 = TensorCombination::pair(u.clone(), v.clone());
    let term3 =
        TensorCombination::pair(u.clone(), Word::empty()).componentwise_concat(&deconcat(v));
    let rhs = term1.minus(&term2).plus(&term3);
    Ok(vec![(vt(lhs), vt(rhs))])
}

fn eval_shuffle_deconcat_compat(
    _alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v) = two(ws);
    let lhs = deconcat_comb(&shuffle(u, v));
    let mut rhs = TensorCombination::zero();
    for (u1, u2) in u.splits() {
        for (v1, v2) in v.splits() {
            rhs = rhs.plus(&TensorCombination::tensor(&shuffle(&u1, &v1), &shuffle(&u2, &v2)));
        }
    }
    Ok(vec![(vt(lhs), vt(rhs))])
}

fn eval_shuffle_module_algebra_negative(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    Ok(vec![split_rule_pair(alg, SH, SH, SH, u, v, w)?])
}

fn eval_worked_example(
    alg: &QuadriAlgebra,
    ws: &[Word],
) -> Result<Vec<(Value, Value)>, AlgebraError> {
    let (u, v, w) = three(ws);
    let vw = concat(v, w);
    let lhs = shuffle(u, &vw);
    let rhs_vee = alg.sweedler_sum(VEE, SH, u, v, w)?;
    let rhs_succ = alg.sweedler_sum(SH, SUCC, u, v, w)?;
    let oracle = shuffle_interleavings(u, &vw);
    let coefficient_sum = lhs.coefficient_sum();
    Ok(vec![
        (vc(lhs.clone()), vc(rhs_vee)),
        (vc(lhs.clone()), vc(rhs_succ)),
        (vc(lhs), vc(oracle)),
        (Value::Integer(coefficient_sum), Value::Integer(BigInt::from(10))),
    ])
}

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

const UNITS_NONE_2: &[bool] = &[false, false];
const UNITS_ALL_2: &[bool] = &[true, true];
const UNITS_ALL_3: &[bool] = &[true, true, true];
const UNITS_LEFT_3: &[bool] = &[true, false, false];
const UNITS_NONE_3: &[bool] = &[false, false, false];

const fn identity(
    name: &'static str,
    statement: &'static str,
    arity: usize,
    unit_slots: &'static [bool],
    filter: Option<FilterFn>,
    eval: EvalFn,
) -> LawDef {
    LawDef { name, statement, arity, unit_slots, kind: LawKind::Identity, filter, eval, note: None }
}

/// The full catalog, in the order reports are aggregated.
pub fn catalog() -> &'static [LawDef] {
    static CATALOG: &[LawDef] = &[
        identity(
            "dendriform_horizontal",
            "(x ≺ y) ≺ z = x ≺ (y ⋆ z);  (x ≻ y) ≺ z = x ≻ (y ≺ z);  (x ⋆ y) ≻ z = x ≻ (y ≻ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_dendriform_horizontal,
        ),
        identity(
            "dendriform_vertical",
            "(x ∧ y) ∧ z = x ∧ (y ⋆ z);  (x ∨ y) ∧ z = x ∨ (y ∧ z);  (x ⋆ y) ∨ z = x ∨ (y ∨ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_dendriform_vertical,
        ),
        identity(
            "quadri_axiom_11",
            "(x ↖ y) ↖ z = x ↖ (y ⋆ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_11,
        ),
        identity(
            "quadri_axiom_12",
            "(x ↗ y) ↖ z = x ↗ (y ≺ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_12,
        ),
        identity(
            "quadri_axiom_13",
            "(x ∧ y) ↗ z = x ↗ (y ≻ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_13,
        ),
        identity(
            "quadri_axiom_21",
            "(x ↙ y) ↖ z = x ↙ (y ∧ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_21,
        ),
        identity(
            "quadri_axiom_22",
            "(x ↘ y) ↖ z = x ↘ (y ↖ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_22,
        ),
        identity(
            "quadri_axiom_23",
            "(x ∨ y) ↗ z = x ↘ (y ↗ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_23,
        ),
        identity(
            "quadri_axiom_31",
            "(x ≺ y) ↙ z = x ↙ (y ∨ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_31,
        ),
        identity(
            "quadri_axiom_32",
            "(x ≻ y) ↙ z = x ↘ (y ↙ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_32,
        ),
        identity(
            "quadri_axiom_33",
            "(x ⋆ y) ↘ z = x ↘ (y ↘ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_axiom_33,
        ),
        identity(
            "star_associative_equals_shuffle",
            "x ⋆ y = x ⧢ y;  (x ⋆ y) ⋆ z = x ⋆ (y ⋆ z)",
            3,
            UNITS_ALL_3,
            Some(adjacent_slots_pairable),
            eval_star_associative_equals_shuffle,
        ),
        identity(
            "quadri_commutativity",
            "u ↗ v = v ↙ u;  u ↘ v = v ↖ u",
            2,
            UNITS_ALL_2,
            Some(|ws| !(ws[0].is_empty() && ws[1].is_empty())),
            eval_quadri_commutativity,
        ),
        identity(
            "recursion_vs_enumeration_ne",
            "u ↗ v: boundary-letter recursion = interleaving enumeration",
            2,
            UNITS_NONE_2,
            None,
            eval_recursion_ne,
        ),
        identity(
            "recursion_vs_enumeration_se",
            "u ↘ v: boundary-letter recursion = interleaving enumeration",
            2,
            UNITS_NONE_2,
            None,
            eval_recursion_se,
        ),
        identity(
            "recursion_vs_enumeration_sw",
            "u ↙ v: boundary-letter recursion = interleaving enumeration",
            2,
            UNITS_NONE_2,
            None,
            eval_recursion_sw,
        ),
        identity(
            "recursion_vs_enumeration_nw",
            "u ↖ v: boundary-letter recursion = interleaving enumeration",
            2,
            UNITS_NONE_2,
            None,
            eval_recursion_nw,
        ),
        identity(
            "split_rule_ne_a",
            "u ↗ (v·w) = Σ_{u=u¹u²} (u¹ ↘ v)·(u² ∧ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_ne_a,
        ),
        identity(
            "split_rule_ne_b",
            "u ↗ (v·w) = Σ_{u=u¹u²} (u¹ ≻ v)·(u² ↗ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_ne_b,
        ),
        identity(
            "split_rule_se_a",
            "u ↘ (v·w) = Σ_{u=u¹u²} (u¹ ↘ v)·(u² ∨ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_se_a,
        ),
        identity(
            "split_rule_se_b",
            "u ↘ (v·w) = Σ_{u=u¹u²} (u¹ ≻ v)·(u² ↘ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_se_b,
        ),
        identity(
            "split_rule_sw_a",
            "u ↙ (v·w) = Σ_{u=u¹u²} (u¹ ↙ v)·(u² ∨ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_sw_a,
        ),
        identity(
            "split_rule_sw_b",
            "u ↙ (v·w) = Σ_{u=u¹u²} (u¹ ≺ v)·(u² ↘ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_sw_b,
        ),
        identity(
            "split_rule_nw_a",
            "u ↖ (v·w) = Σ_{u=u¹u²} (u¹ ↙ v)·(u² ∧ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_nw_a,
        ),
        identity(
            "split_rule_nw_b",
            "u ↖ (v·w) = Σ_{u=u¹u²} (u¹ ≺ v)·(u² ↗ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_nw_b,
        ),
        identity(
            "split_rule_wedge",
            "u ∧ (v·w) = Σ_{u=u¹u²} (u¹ ∨ v)·(u² ∧ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_wedge,
        ),
        identity(
            "split_rule_prec",
            "u ≺ (v·w) = Σ_{u=u¹u²} (u¹ ≺ v)·(u² ≻ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_prec,
        ),
        identity(
            "split_rule_vee",
            "u ∨ (v·w) = Σ_{u=u¹u²} (u¹ ∨ v)·(u² ∨ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_vee,
        ),
        identity(
            "split_rule_succ",
            "u ≻ (v·w) = Σ_{u=u¹u²} (u¹ ≻ v)·(u² ≻ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_succ,
        ),
        identity(
            "split_rule_shuffle_a",
            "u ⧢ (v·w) = Σ_{u=u¹u²} (u¹ ∨ v)·(u² ⧢ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_shuffle_a,
        ),
        identity(
            "split_rule_shuffle_b",
            "u ⧢ (v·w) = Σ_{u=u¹u²} (u¹ ⧢ v)·(u² ≻ w)",
            3,
            UNITS_LEFT_3,
            None,
            eval_split_shuffle_b,
        ),
        identity(
            "left_action_vee",
            "u ∨ (v ∨ w) = (u ⧢ v) ∨ w   on the reduced triple tensor",
            3,
            UNITS_ALL_3,
            Some(not_all_units),
            eval_left_action_vee,
        ),
        identity(
            "right_action_wedge",
            "(u ∧ v) ∧ w = u ∧ (v ⧢ w)   on the reduced triple tensor",
            3,
            UNITS_ALL_3,
            Some(not_all_units),
            eval_right_action_wedge,
        ),
        identity(
            "left_action_succ",
            "u ≻ (v ≻ w) = (u ⧢ v) ≻ w   on the reduced triple tensor",
            3,
            UNITS_ALL_3,
            Some(not_all_units),
            eval_left_action_succ,
        ),
        identity(
            "right_action_prec",
            "(u ≺ v) ≺ w = u ≺ (v ⧢ w)   on the reduced triple tensor",
            3,
            UNITS_ALL_3,
            Some(not_all_units),
            eval_right_action_prec,
        ),
        identity(
            "module_algebra_vee",
            "u ∨ (v·w) = Σ (u¹ ∨ v)·(u² ∨ w), evaluated through the tensor coproduct",
            3,
            UNITS_LEFT_3,
            None,
            eval_module_algebra_vee,
        ),
        identity(
            "module_algebra_succ",
            "u ≻ (v·w) = Σ (u¹ ≻ v)·(u² ≻ w), evaluated through the tensor coproduct",
            3,
            UNITS_LEFT_3,
            None,
            eval_module_algebra_succ,
        ),
        identity(
            "delta_prime_vee",
            "Δ′(u ∨ v) = Σ_{u=u¹u², v=v¹v², (u²,v²)≠(1,1)} (u¹ ⧢ v¹) ⊗ (u² ∨ v²)",
            2,
            UNITS_ALL_2,
            Some(|ws| !(ws[0].is_empty() && ws[1].is_empty())),
            eval_delta_prime_vee,
        ),
        identity(
            "delta_second_prec",
            "Δ″(u ≺ v) = Σ_{u=u¹u², v=v¹v², (u¹,v¹)≠(1,1)} (u¹ ≺ v¹) ⊗ (u² ⧢ v²)",
            2,
            UNITS_ALL_2,
            Some(|ws| !(ws[0].is_empty() && ws[1].is_empty())),
            eval_delta_second_prec,
        ),
        identity(
            "infinitesimal_bialgebra",
            "Δ(u·v) = (Δu)(1 ⊗ v) − u ⊗ v + (u ⊗ 1)(Δv)",
            2,
            UNITS_NONE_2,
            None,
            eval_infinitesimal_bialgebra,
        ),
        identity(
            "shuffle_deconcat_compat",
            "Δ(u ⧢ v) = Σ (u¹ ⧢ v¹) ⊗ (u² ⧢ v²)",
            2,
            UNITS_ALL_2,
            None,
            eval_shuffle_deconcat_compat,
        ),
        LawDef {
            name: "shuffle_module_algebra_negative",
            statement: "search: u ⧢ (v·w) ≠ Σ (u¹ ⧢ v)·(u² ⧢ w) for some instance \
                        (the shuffle is not a module-algebra over concatenation)",
            arity: 3,
            unit_slots: UNITS_LEFT_3,
            kind: LawKind::CounterexampleSearch,
            filter: None,
            eval: eval_shuffle_module_algebra_negative,
            note: None,
        },
        LawDef {
            name: "worked_example",
            statement: "u ⧢ (v·w) = Σ (u¹ ∨ v)·(u² ⧢ w) = Σ (u¹ ⧢ v)·(u² ≻ w) on the pinned \
                        instance u=ab, v=cd, w=e, with coefficient sum C(5,2) = 10",
            arity: 3,
            unit_slots: UNITS_NONE_3,
            kind: LawKind::WorkedExample,
            filter: None,
            eval: eval_worked_example,
            note: Some(
                "hand-written expansions of this identity are easy to get wrong (a known \
                 transcription duplicates abcde in place of cabde and misprints cdabe), so both \
                 sides are validated against the independent interleaving enumeration",
            ),
        },
    ];
    CATALOG
}
