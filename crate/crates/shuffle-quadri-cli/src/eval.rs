//! Evaluation of parsed expressions against the algebra.

use num_bigint::BigInt;
use serde_json::Value as Json;
use shuffle_quadri::{
    concat_comb, deconcat_comb, linear_extend_tensor, AlgebraError, Alphabet, Combination,
    DerivedOp, PairOp, QuadriAlgebra, QuadriOp, TensorCombination,
};

use crate::expr::Expr;

/// The result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluated {
    /// A linear combination of words.
    Combination(Combination),
    /// A linear combination of elementary tensors.
    Tensor(TensorCombination),
}

impl Evaluated {
    /// Canonical text rendering.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self {
            Evaluated::Combination(c) => c.display(alphabet),
            Evaluated::Tensor(t) => t.display(alphabet),
        }
    }

    /// Canonical JSON rendering.
    pub fn to_json(&self, alphabet: &Alphabet) -> Json {
        match self {
            Evaluated::Combination(c) => c.to_json(alphabet),
            Evaluated::Tensor(t) => t.to_json(alphabet),
        }
    }
}

fn pair_op_for(name: &str) -> Option<PairOp> {
    Some(match name {
        "sh" => PairOp::Shuffle,
        "ne" => PairOp::Quadri(QuadriOp::NorthEast),
        "se" => PairOp::Quadri(QuadriOp::SouthEast),
        "sw" => PairOp::Quadri(QuadriOp::SouthWest),
        "nw" => PairOp::Quadri(QuadriOp::NorthWest),
        "succ" => PairOp::Derived(DerivedOp::Succ),
        "prec" => PairOp::Derived(DerivedOp::Prec),
        "vee" => PairOp::Derived(DerivedOp::Vee),
        "wedge" => PairOp::Derived(DerivedOp::Wedge),
        "star" => PairOp::Derived(DerivedOp::Star),
        _ => return None,
    })
}

/// Evaluate a well-typed expression. Word literals resolve against the given
/// alphabet; partial operations propagate their domain errors.
pub fn eval(expr: &Expr, alphabet: &Alphabet, alg: &QuadriAlgebra) -> Result<Evaluated, AlgebraError> {
    Ok(match expr {
        Expr::WordLiteral(text) => Evaluated::Combination(Combination::word(alphabet.word(text)?)),
        Expr::IntLiteral(value) => {
            Evaluated::Combination(Combination::unit().scale(&BigInt::from(*value)))
        }
        Expr::Add(lhs, rhs) => match (eval(lhs, alphabet, alg)?, eval(rhs, alphabet, alg)?) {
            (Evaluated::Combination(a), Evaluated::Combination(b)) => {
                Evaluated::Combination(a.plus(&b))
            }
            (Evaluated::Tensor(a), Evaluated::Tensor(b)) => Evaluated::Tensor(a.plus(&b)),
            _ => unreachable!("parser rejects mixed-type sums"),
        },
        Expr::Sub(lhs, rhs) => match (eval(lhs, alphabet, alg)?, eval(rhs, alphabet, alg)?) {
            (Evaluated::Combination(a), Evaluated::Combination(b)) => {
                Evaluated::Combination(a.minus(&b))
            }
            (Evaluated::Tensor(a), Evaluated::Tensor(b)) => Evaluated::Tensor(a.minus(&b)),
            _ => unreachable!("parser rejects mixed-type differences"),
        },
        Expr::ScalarMul(scalar, inner) => {
            let scalar = BigInt::from(*scalar);
            match eval(inner, alphabet, alg)? {
                Evaluated::Combination(c) => Evaluated::Combination(c.scale(&scalar)),
                Evaluated::Tensor(t) => Evaluated::Tensor(t.scale(&scalar)),
            }
        }
        Expr::Call(name, args) => {
            let operands: Vec<Combination> = args
                .iter()
                .map(|arg| match eval(arg, alphabet, alg)? {
                    Evaluated::Combination(c) => Ok(c),
                    Evaluated::Tensor(_) => unreachable!("parser rejects tensor arguments"),
                })
                .collect::<Result<_, AlgebraError>>()?;
            match *name {
                "conc" => Evaluated::Combination(concat_comb(&operands[0], &operands[1])),
                "delta" => Evaluated::Tensor(deconcat_comb(&operands[0])),
                "deltap" => Evaluated::Tensor(linear_extend_tensor(
                    shuffle_quadri::deconcat_prime,
                    &operands[0],
                )?),
                "deltas" => Evaluated::Tensor(linear_extend_tensor(
                    shuffle_quadri::deconcat_second,
                    &operands[0],
                )?),
                other => {
                    let op = pair_op_for(other).expect("parser admits only catalogued operators");
                    Evaluated::Combination(alg.pair_op_comb(op, &operands[0], &operands[1])?)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use proptest::prelude::*;

    fn run(input: &str) -> Result<Evaluated, AlgebraError> {
        let alphabet = Alphabet::latin(26).unwrap();
        eval(&parse(input).unwrap(), &alphabet, &QuadriAlgebra::new())
    }

    fn show(input: &str) -> String {
        run(input).unwrap().display(&Alphabet::latin(26).unwrap())
    }

    #[test]
    fn evaluates_shuffles_and_concatenations() {
        assert_eq!(show("sh(a,b)"), "ab + ba");
        assert_eq!(show("conc(ab,cd)"), "abcd");
        assert_eq!(show("sh(ab,ab)"), "4*aabb + 2*abab");
        assert_eq!(show("sh(a,1)"), "a");
    }

    #[test]
    fn evaluates_corner_and_half_products() {
        assert_eq!(show("se(a,bc)"), "bac");
        assert_eq!(show("ne(a,bc) - sw(bc,a)"), "0");
        assert_eq!(show("star(ab,cd) - sh(ab,cd)"), "0");
        assert_eq!(show("succ(a,bc)"), "bac + bca");
        assert_eq!(show("vee(a,b) + wedge(a,b) - sh(a,b)"), "0");
    }

    #[test]
    fn evaluates_unit_literals() {
        assert_eq!(show("1"), "1");
        assert_eq!(show("0"), "0");
        assert_eq!(show("2*1 + 1"), "3");
        assert_eq!(show("nw(a,1)"), "a");
        assert_eq!(show("se(1,a)"), "a");
        assert_eq!(show("ne(a,1)"), "0");
    }

    #[test]
    fn evaluates_coproducts() {
        assert_eq!(show("delta(ab)"), "1(x)ab + a(x)b + ab(x)1");
        assert_eq!(show("deltap(ab)"), "1(x)ab + a(x)b");
        assert_eq!(show("deltas(ab)"), "a(x)b + ab(x)1");
        // Δ − Δ′ − Δ″ leaves minus the interior split.
        assert_eq!(show("delta(ab) - deltap(ab) - deltas(ab)"), "-a(x)b");
    }

    #[test]
    fn evaluates_scalars_and_grouping() {
        assert_eq!(show("2*ab + ba"), "2*ab + ba");
        assert_eq!(show("2*(ab + ba) - ab"), "ab + 2*ba");
        assert_eq!(show("-ab + ab"), "0");
    }

    #[test]
    fn partial_operations_report_domain_errors() {
        assert_eq!(run("se(1,1)").unwrap_err(), AlgebraError::UndefinedOnUnitPair);
        assert_eq!(run("star(1,1)").unwrap_err(), AlgebraError::UndefinedOnUnitPair);
        assert_eq!(run("deltap(1)").unwrap_err(), AlgebraError::UnitNotInHPlus);
        assert_eq!(run("deltas(2*1 - 1)").unwrap_err(), AlgebraError::UnitNotInHPlus);
    }

    #[test]
    fn unknown_letters_respect_the_alphabet() {
        let small = Alphabet::from_chars("xyz").unwrap();
        let alg = QuadriAlgebra::new();
        let value = eval(&parse("sh(x,y)").unwrap(), &small, &alg).unwrap();
        assert_eq!(value.display(&small), "xy + yx");
        assert_eq!(
            eval(&parse("sh(a,b)").unwrap(), &small, &alg).unwrap_err(),
            AlgebraError::UnknownLetter('a')
        );
    }

    proptest! {
        /// Canonical text output of any evaluated combination re-parses to
        /// an equal value (the printer emits valid expression syntax).
        #[test]
        fn display_round_trips_through_the_parser(
            terms in proptest::collection::vec(
                ("[abc]{0,4}", -4i64..=4),
                0..6,
            )
        ) {
            let alphabet = Alphabet::latin(3).unwrap();
            let alg = QuadriAlgebra::new();
            let mut combination = Combination::zero();
            for (text, coef) in &terms {
                let word = alphabet.word(text).unwrap();
                combination.add_term(word, BigInt::from(*coef));
            }
            let printed = combination.display(&alphabet);
            let reparsed = eval(&parse(&printed).unwrap(), &alphabet, &alg).unwrap();
            prop_assert_eq!(reparsed, Evaluated::Combination(combination));
        }
    }
}
