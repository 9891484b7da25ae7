//! The expression surface language: lexer, recursive-descent parser, and
//! parse-time type checking.
//!
//! Grammar (whitespace insensitive, LL(1)):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := integer ('*' factor)? | factor
//! factor := call | wordlit | '(' expr ')'
//! call   := name '(' expr (',' expr)* ')'
//! wordlit := one or more lowercase letters
//! ```
//!
//! The literal `1` (an integer) denotes the empty word, so canonical output
//! of the evaluator — which renders empty-word terms as bare integers and
//! scalar multiples as `n*word` — re-parses to an equal value. Operator
//! names are ASCII spellings of the algebra: `sh` (shuffle), `conc`
//! (concatenation), the four corner products `ne`/`se`/`sw`/`nw`, the four
//! half-products `succ`/`prec`/`vee`/`wedge`, their sum `star`, and the
//! coproducts `delta` / `deltap` / `deltas`. The three coproducts produce
//! tensor values, which cannot feed word-valued slots; this is rejected at
//! parse time.

use std::fmt;

use thiserror::Error;

/// Binary word-valued operators.
pub const BINARY_OPS: &[&str] = &[
    "sh", "conc", "ne", "se", "sw", "nw", "succ", "prec", "vee", "wedge", "star",
];

/// Unary tensor-valued operators (the coproduct and its two reductions).
pub const UNARY_OPS: &[&str] = &["delta", "deltap", "deltas"];

/// Abstract syntax of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A word literal, e.g. `abc`.
    WordLiteral(String),
    /// An integer literal; denotes that multiple of the empty word.
    IntLiteral(i64),
    /// Sum of two values of the same type.
    Add(Box<Expr>, Box<Expr>),
    /// Difference of two values of the same type.
    Sub(Box<Expr>, Box<Expr>),
    /// An integer multiple of a value.
    ScalarMul(i64, Box<Expr>),
    /// An operator application.
    Call(&'static str, Vec<Expr>),
}

/// The two value types of the language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueType {
    /// A linear combination of words.
    Word,
    /// A linear combination of elementary tensors.
    Tensor,
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueType::Word => "word-valued",
            ValueType::Tensor => "tensor-valued",
        })
    }
}

impl Expr {
    /// The type an expression evaluates to. Total on parser output, since
    /// the parser rejects ill-typed trees.
    pub fn value_type(&self) -> ValueType {
        match self {
            Expr::WordLiteral(_) | Expr::IntLiteral(_) => ValueType::Word,
            Expr::Add(lhs, _) | Expr::Sub(lhs, _) => lhs.value_type(),
            Expr::ScalarMul(_, inner) => inner.value_type(),
            Expr::Call(name, _) => {
                if UNARY_OPS.contains(name) {
                    ValueType::Tensor
                } else {
                    ValueType::Word
                }
            }
        }
    }
}

/// A parse failure, with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Unexpected character or token.
    #[error("syntax error at offset {position}: expected {expected}")]
    SyntaxError {
        /// Byte offset into the input.
        position: usize,
        /// What the parser was looking for.
        expected: &'static str,
    },
    /// An identifier applied as an operator that is not in the catalog.
    #[error("unknown operator `{name}` at offset {position}")]
    UnknownOperator {
        /// The identifier as written.
        name: String,
        /// Byte offset of the identifier.
        position: usize,
    },
    /// Wrong number of arguments for a known operator.
    #[error("operator `{name}` takes {expected} argument(s), found {got}")]
    ArityError {
        /// Operator name.
        name: &'static str,
        /// Required arity.
        expected: usize,
        /// Arguments supplied.
        got: usize,
    },
    /// A tensor value fed into a word-valued position.
    #[error("type error at offset {position}: {context} requires a word-valued operand, found a tensor value")]
    TypeError {
        /// Byte offset of the offending operand.
        position: usize,
        /// The construct imposing the constraint.
        context: &'static str,
    },
    /// `+`/`-` between a word value and a tensor value.
    #[error("type error at offset {position}: cannot combine a {lhs} value with a {rhs} value")]
    MixedTypes {
        /// Byte offset of the operator.
        position: usize,
        /// Type of the left side.
        lhs: ValueType,
        /// Type of the right side.
        rhs: ValueType,
    },
    /// Integer literal out of range.
    #[error("integer literal at offset {position} does not fit in 64 bits")]
    IntegerOverflow {
        /// Byte offset of the literal.
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i64),
    Name(&'static str),
    UnknownName(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    End,
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer { input: input.as_bytes(), pos: 0 }
    }

    /// Next token and its starting offset.
    fn next(&mut self) -> Result<(Token, usize), ParseError> {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.input.len() {
            return Ok((Token::End, start));
        }
        let byte = self.input[self.pos];
        let simple = match byte {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(token) = simple {
            self.pos += 1;
            return Ok((token, start));
        }
        if byte.is_ascii_digit() {
            while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits");
            let value: i64 = text
                .parse()
                .map_err(|_| ParseError::IntegerOverflow { position: start })?;
            return Ok((Token::Int(value), start));
        }
        if byte.is_ascii_lowercase() {
            while self.pos < self.input.len() && self.input[self.pos].is_ascii_lowercase() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii letters");
            // Whether the identifier is an operator is decided by the parser
            // from the following token; here both readings are kept.
            if let Some(&name) = BINARY_OPS.iter().chain(UNARY_OPS).find(|&&n| n == text) {
                return Ok((Token::Name(name), start));
            }
            return Ok((Token::UnknownName(text.to_string()), start));
        }
        Err(ParseError::SyntaxError { position: start, expected: "a term" })
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &(Token, usize) {
        &self.tokens[self.index]
    }

    fn advance(&mut self) -> (Token, usize) {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, expected: &'static str) -> Result<usize, ParseError> {
        let (t, pos) = self.advance();
        if t == token {
            Ok(pos)
        } else {
            Err(ParseError::SyntaxError { position: pos, expected })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        // An optional leading minus negates the first term, matching the
        // canonical printer which may open with `-`.
        let mut lhs = if matches!(self.peek().0, Token::Minus) {
            self.advance();
            let term = self.term()?;
            Expr::ScalarMul(-1, Box::new(term))
        } else {
            self.term()?
        };
        loop {
            let negative = match self.peek().0 {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            let (_, op_pos) = self.advance();
            let rhs = self.term()?;
            if lhs.value_type() != rhs.value_type() {
                return Err(ParseError::MixedTypes {
                    position: op_pos,
                    lhs: lhs.value_type(),
                    rhs: rhs.value_type(),
                });
            }
            lhs = if negative {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if let (Token::Int(value), _) = self.peek() {
            let value = *value;
            self.advance();
            if matches!(self.peek().0, Token::Star) {
                self.advance();
                let (factor, factor_pos) = self.factor()?;
                if factor.value_type() != ValueType::Word {
                    return Err(ParseError::TypeError {
                        position: factor_pos,
                        context: "scalar multiplication",
                    });
                }
                return Ok(Expr::ScalarMul(value, Box::new(factor)));
            }
            // A bare integer stands for that multiple of the empty word;
            // in particular `1` is the unit.
            return Ok(Expr::IntLiteral(value));
        }
        Ok(self.factor()?.0)
    }

    fn factor(&mut self) -> Result<(Expr, usize), ParseError> {
        let (token, pos) = self.advance();
        match token {
            Token::Int(value) => Ok((Expr::IntLiteral(value), pos)),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok((inner, pos))
            }
            Token::Name(name) => {
                if matches!(self.peek().0, Token::LParen) {
                    self.advance();
                    Ok((self.call(name, pos)?, pos))
                } else {
                    // An operator name not followed by `(` is a word literal
                    // (e.g. `se` is a valid two-letter word).
                    Ok((Expr::WordLiteral(name.to_string()), pos))
                }
            }
            Token::UnknownName(text) => {
                if matches!(self.peek().0, Token::LParen) {
                    Err(ParseError::UnknownOperator { name: text, position: pos })
                } else {
                    Ok((Expr::WordLiteral(text), pos))
                }
            }
            _ => Err(ParseError::SyntaxError { position: pos, expected: "a term" }),
        }
    }

    fn call(&mut self, name: &'static str, _name_pos: usize) -> Result<Expr, ParseError> {
        let mut args = Vec::new();
        let mut arg_positions = Vec::new();
        loop {
            arg_positions.push(self.peek().1);
            args.push(self.expr()?);
            let (token, pos) = self.advance();
            match token {
                Token::Comma => continue,
                Token::RParen => break,
                _ => return Err(ParseError::SyntaxError { position: pos, expected: "`,` or `)`" }),
            }
        }
        let expected = if UNARY_OPS.contains(&name) { 1 } else { 2 };
        if args.len() != expected {
            return Err(ParseError::ArityError { name, expected, got: args.len() });
        }
        for (arg, &pos) in args.iter().zip(&arg_positions) {
            if arg.value_type() != ValueType::Word {
                return Err(ParseError::TypeError { position: pos, context: "an operator argument" });
            }
        }
        Ok(Expr::Call(name, args))
    }
}

/// Parse an expression, rejecting syntax, arity, and type errors.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut lexer = Lexer::new(input);
    let mut tokens = Vec::new();
    loop {
        let (token, pos) = lexer.next()?;
        let end = token == Token::End;
        tokens.push((token, pos));
        if end {
            break;
        }
    }
    let mut parser = Parser { tokens, index: 0 };
    let expr = parser.expr()?;
    let (trailing, pos) = parser.advance();
    if trailing != Token::End {
        return Err(ParseError::SyntaxError { position: pos, expected: "end of input" });
    }
    Ok(expr)
}
