//! Recursive-descent parser for polynomial expressions in the variable `u`.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ['^' uint]
//! base     := rational | 'u' | '(' expr ')'
//! rational := uint ['/' uint]
//! ```
//!
//! `^` binds tightest and is non-associative: `u^2^3` needs parentheses.
//! Exponents are non-negative integer literals.
//!
//! Documented rejection cases (column is 1-based):
//! - `u^^2`  -> syntax error at column 3, expected an unsigned integer
//! - `2*/3`  -> syntax error at column 3, expected a number, `u` or `(`
//! - `(u+1`  -> syntax error at column 5, expected `)`

use crate::exactnum::{Rational, RationalPolynomial};
use num_bigint::BigInt;
use std::fmt;

/// Parse error with the 1-based column of the offending token and the
/// set of tokens that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at column {}: expected {}, found {}",
            self.column,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for SyntaxError {}

/// Expression tree for polynomial input; lowers deterministically to a
/// [`RationalPolynomial`] via [`PolynomialExpr::to_polynomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolynomialExpr {
    Literal(Rational),
    Variable,
    Neg(Box<PolynomialExpr>),
    Add(Box<PolynomialExpr>, Box<PolynomialExpr>),
    Sub(Box<PolynomialExpr>, Box<PolynomialExpr>),
    Mul(Box<PolynomialExpr>, Box<PolynomialExpr>),
    Pow(Box<PolynomialExpr>, u32),
    Group(Box<PolynomialExpr>),
}

impl PolynomialExpr {
    pub fn to_polynomial(&self) -> RationalPolynomial {
        match self {
            PolynomialExpr::Literal(q) => RationalPolynomial::constant(q.clone()),
            PolynomialExpr::Variable => RationalPolynomial::x(),
            PolynomialExpr::Neg(e) => -&e.to_polynomial(),
            PolynomialExpr::Add(a, b) => &a.to_polynomial() + &b.to_polynomial(),
            PolynomialExpr::Sub(a, b) => &a.to_polynomial() - &b.to_polynomial(),
            PolynomialExpr::Mul(a, b) => &a.to_polynomial() * &b.to_polynomial(),
            PolynomialExpr::Pow(base, exp) => {
                let base = base.to_polynomial();
                let mut out = RationalPolynomial::constant(Rational::one());
                for _ in 0..*exp {
                    out = &out * &base;
                }
                out
            }
            PolynomialExpr::Group(e) => e.to_polynomial(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    UInt(BigInt),
    Variable,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::UInt(n) => format!("'{n}'"),
            Token::Variable => "'u'".to_string(),
            Token::Plus => "'+'".to_string(),
            Token::Minus => "'-'".to_string(),
            Token::Star => "'*'".to_string(),
            Token::Slash => "'/'".to_string(),
            Token::Caret => "'^'".to_string(),
            Token::LParen => "'('".to_string(),
            Token::RParen => "')'".to_string(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, SyntaxError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => tokens.push((Token::Plus, column)),
            '-' => tokens.push((Token::Minus, column)),
            '*' => tokens.push((Token::Star, column)),
            '/' => tokens.push((Token::Slash, column)),
            '^' => tokens.push((Token::Caret, column)),
            '(' => tokens.push((Token::LParen, column)),
            ')' => tokens.push((Token::RParen, column)),
            'u' => tokens.push((Token::Variable, column)),
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n: BigInt = digits.parse().expect("digit run is a decimal literal");
                tokens.push((Token::UInt(n), start + 1));
                continue;
            }
            other => {
                return Err(SyntaxError {
                    column,
                    expected: vec!["a number", "'u'", "an operator", "'('", "')'"],
                    found: format!("'{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |&(_, col)| col)
    }

    fn found(&self) -> String {
        self.tokens
            .get(self.pos)
            .map_or_else(|| "end of input".to_string(), |(t, _)| t.describe())
    }

    fn error(&self, expected: Vec<&'static str>) -> SyntaxError {
        SyntaxError {
            column: self.column(),
            expected,
            found: self.found(),
        }
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<PolynomialExpr, SyntaxError> {
        let negated = if self.peek() == Some(&Token::Minus) {
            self.advance();
            true
        } else {
            false
        };
        let mut node = self.term()?;
        if negated {
            node = PolynomialExpr::Neg(Box::new(node));
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let rhs = self.term()?;
                    node = PolynomialExpr::Add(Box::new(node), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.advance();
                    let rhs = self.term()?;
                    node = PolynomialExpr::Sub(Box::new(node), Box::new(rhs));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<PolynomialExpr, SyntaxError> {
        let mut node = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.advance();
            let rhs = self.factor()?;
            node = PolynomialExpr::Mul(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<PolynomialExpr, SyntaxError> {
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            self.advance();
            let exp = self.advance_uint()?;
            return Ok(PolynomialExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn advance_uint(&mut self) -> Result<u32, SyntaxError> {
        match self.peek() {
            Some(Token::UInt(_)) => {
                let Some(Token::UInt(n)) = self.advance() else {
                    unreachable!()
                };
                u32::try_from(&n).map_err(|_| SyntaxError {
                    column: self.tokens[self.pos - 1].1,
                    expected: vec!["an exponent below 2^32"],
                    found: format!("'{n}'"),
                })
            }
            _ => Err(self.error(vec!["an unsigned integer"])),
        }
    }

    fn base(&mut self) -> Result<PolynomialExpr, SyntaxError> {
        match self.peek() {
            Some(Token::UInt(_)) => {
                let Some(Token::UInt(num)) = self.advance() else {
                    unreachable!()
                };
                if self.peek() == Some(&Token::Slash) {
                    self.advance();
                    match self.peek() {
                        Some(Token::UInt(_)) => {
                            let Some(Token::UInt(den)) = self.advance() else {
                                unreachable!()
                            };
                            if den == BigInt::from(0u32) {
                                return Err(SyntaxError {
                                    column: self.tokens[self.pos - 1].1,
                                    expected: vec!["a nonzero denominator"],
                                    found: "'0'".to_string(),
                                });
                            }
                            Ok(PolynomialExpr::Literal(Rational::new(num, den)))
                        }
                        _ => Err(self.error(vec!["an unsigned integer"])),
                    }
                } else {
                    Ok(PolynomialExpr::Literal(Rational::from_integer(num)))
                }
            }
            Some(Token::Variable) => {
                self.advance();
                Ok(PolynomialExpr::Variable)
            }
            Some(Token::LParen) => {
                self.advance();
                let inner = self.expr()?;
                if self.peek() == Some(&Token::RParen) {
                    self.advance();
                    Ok(PolynomialExpr::Group(Box::new(inner)))
                } else {
                    Err(self.error(vec!["')'"]))
                }
            }
            _ => Err(self.error(vec!["a number", "'u'", "'('"])),
        }
    }
}

/// Parses an expression to its tree form.
pub fn parse_poly(src: &str) -> Result<PolynomialExpr, SyntaxError> {
    let tokens = tokenize(src)?;
    let end_column = src.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_column,
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.error(vec!["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(expr)
}

/// Parses and lowers in one step.
pub fn parse_polynomial(src: &str) -> Result<RationalPolynomial, SyntaxError> {
    parse_poly(src).map(|e| e.to_polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn direct_reading() {
        let p = parse_polynomial("u^2 + 3*u - 1/2").unwrap();
        assert_eq!(p.coeffs(), &[q(-1, 2), q(3, 1), q(1, 1)]);
    }

    #[test]
    fn negation_and_grouping() {
        let p = parse_polynomial("-(u - 1)*(u + 1)").unwrap();
        assert_eq!(p.coeffs(), &[q(1, 1), Rational::zero(), q(-1, 1)]);
    }

    #[test]
    fn caret_is_non_associative() {
        let err = parse_poly("u^2^3").unwrap_err();
        assert_eq!(err.column, 4);
        let err = parse_poly("u^^2").unwrap_err();
        assert_eq!(err.column, 3);
        assert_eq!(err.expected, vec!["an unsigned integer"]);
    }

    #[test]
    fn documented_error_columns() {
        assert_eq!(parse_poly("u^^2").unwrap_err().column, 3);
        assert_eq!(parse_poly("2*/3").unwrap_err().column, 3);
        assert_eq!(parse_poly("(u+1").unwrap_err().column, 5);
    }

    #[test]
    fn whitespace_insignificant() {
        let a = parse_polynomial("u^2+3*u-1/2").unwrap();
        let b = parse_polynomial("  u^2 +  3 * u - 1 / 2 ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_polynomial("7/14").unwrap().coeffs(), &[q(1, 2)],);
        assert_eq!(parse_polynomial("0").unwrap(), RationalPolynomial::zero());
        let err = parse_poly("1/0").unwrap_err();
        assert_eq!(err.column, 3);
    }

    #[test]
    fn zero_exponent_and_towers() {
        assert_eq!(parse_polynomial("u^0").unwrap().coeffs(), &[q(1, 1)]);
        assert_eq!(
            parse_polynomial("(u^2)^3").unwrap(),
            parse_polynomial("u^6").unwrap()
        );
    }

    #[test]
    fn trailing_garbage_rejected() {
        let err = parse_poly("u 2").unwrap_err();
        assert_eq!(err.column, 3);
        let err = parse_poly("u + ").unwrap_err();
        assert_eq!(err.column, 5);
    }

    #[test]
    fn print_then_parse_round_trip() {
        let p = RationalPolynomial::from_coeffs(vec![q(-1, 2), q(3, 1), Rational::zero(), q(5, 7)]);
        let reparsed = parse_polynomial(&p.to_string()).unwrap();
        assert_eq!(p, reparsed);
    }
}
