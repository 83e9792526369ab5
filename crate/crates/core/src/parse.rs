//! Text input: a shared lexer, the polynomial grammar, and untyped polynomial
//! syntax that is instantiated against a concrete ring.
//!
//! Grammar for polynomials: terms joined by `+` and `-`; a term is a
//! coefficient (`3` or `3/4`), optionally times variable powers joined by `*`
//! with `^` for exponents. Whitespace is insignificant.

use crate::poly::{PolyRing, Polynomial};
use crate::scalar::{Field, FieldError};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Equals,
    DotDot,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Int(s) => write!(f, "`{s}`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
            Token::Star => write!(f, "`*`"),
            Token::Caret => write!(f, "`^`"),
            Token::Slash => write!(f, "`/`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::LBracket => write!(f, "`[`"),
            Token::RBracket => write!(f, "`]`"),
            Token::Comma => write!(f, "`,`"),
            Token::Semicolon => write!(f, "`;`"),
            Token::Equals => write!(f, "`=`"),
            Token::DotDot => write!(f, "`..`"),
        }
    }
}

/// A parse failure with a byte position into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, position: usize) -> Self {
        ParseError {
            message: message.into(),
            position,
        }
    }

    /// Line/column (1-based) of this error within `source`.
    pub fn line_col(&self, source: &str) -> (usize, usize) {
        line_col(source, self.position)
    }

    /// Render with line/column resolved against the source text.
    pub fn describe(&self, source: &str) -> String {
        let (line, col) = self.line_col(source);
        format!("line {line}, column {col}: {}", self.message)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (offset {})", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

pub(crate) fn line_col(source: &str, offset: usize) -> (usize, usize) {
    let clamped = offset.min(source.len());
    let before = &source[..clamped];
    let line = before.matches('\n').count() + 1;
    let col = clamped - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
    (line, col)
}

/// Tokenize `text`, yielding `(token, byte_offset)` pairs.
pub fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            b'-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            b'*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            b'^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            b'/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            b'(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            b'[' => {
                out.push((Token::LBracket, i));
                i += 1;
            }
            b']' => {
                out.push((Token::RBracket, i));
                i += 1;
            }
            b',' => {
                out.push((Token::Comma, i));
                i += 1;
            }
            b';' => {
                out.push((Token::Semicolon, i));
                i += 1;
            }
            b'=' => {
                out.push((Token::Equals, i));
                i += 1;
            }
            b'.' => {
                if bytes.get(i + 1) == Some(&b'.') {
                    out.push((Token::DotDot, i));
                    i += 2;
                } else {
                    return Err(ParseError::new("unexpected `.`", i));
                }
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(text[start..i].to_string()), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError::new(
                    format!(
                        "unexpected character `{}`",
                        text[i..].chars().next().unwrap()
                    ),
                    i,
                ))
            }
        }
    }
    Ok(out)
}

/// One parsed term: sign, coefficient digits, and variable powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSyntax {
    pub negative: bool,
    pub numerator: String,
    pub denominator: Option<String>,
    pub powers: Vec<(String, u32, usize)>,
    pub position: usize,
}

/// Field-independent polynomial syntax.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolySyntax {
    pub terms: Vec<TermSyntax>,
}

impl PolySyntax {
    /// Resolve variables and coefficients against a concrete ring.
    pub fn instantiate<F: Field>(
        &self,
        ring: &Arc<PolyRing<F>>,
    ) -> Result<Polynomial<F>, ParseError> {
        let field = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let coeff = match &t.denominator {
                None => field.from_decimal(&t.numerator),
                Some(d) => field.from_decimal_ratio(&t.numerator, d),
            };
            let mut c =
                coeff.map_err(|e: FieldError| ParseError::new(e.to_string(), t.position))?;
            if t.negative {
                c = field.neg(&c);
            }
            let mut exps = vec![0u32; ring.arity()];
            for (name, e, pos) in &t.powers {
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| ParseError::new(format!("unknown variable `{name}`"), *pos))?;
                exps[idx] += e;
            }
            terms.push((crate::monomial::Monomial::new(exps), c));
        }
        Ok(ring.from_terms(terms))
    }
}

/// Token-stream parser used by both the free-standing polynomial parser and
/// the session-file parser.
pub(crate) struct TokenCursor<'a> {
    pub tokens: &'a [(Token, usize)],
    pub pos: usize,
    pub end_offset: usize,
}

impl<'a> TokenCursor<'a> {
    pub fn new(tokens: &'a [(Token, usize)], end_offset: usize) -> Self {
        TokenCursor {
            tokens,
            pos: 0,
            end_offset,
        }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    pub fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.end_offset)
    }

    pub fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some((t, _)) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some((t, o)) => Err(ParseError::new(format!("expected {want}, found {t}"), *o)),
            None => Err(ParseError::new(
                format!("expected {want}, found end of input"),
                self.end_offset,
            )),
        }
    }

    fn parse_u32(&mut self, what: &str) -> Result<u32, ParseError> {
        let off = self.offset();
        match self.next() {
            Some(Token::Int(s)) => s
                .parse::<u32>()
                .map_err(|_| ParseError::new(format!("{what} out of range"), off)),
            other => Err(ParseError::new(
                match other {
                    Some(t) => format!("expected {what}, found {t}"),
                    None => format!("expected {what}, found end of input"),
                },
                off,
            )),
        }
    }

    /// Parse a polynomial expression, stopping (without consuming) at `,`,
    /// `)` or `;`.
    pub fn parse_poly(&mut self) -> Result<PolySyntax, ParseError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            match self.peek() {
                None | Some(Token::Comma) | Some(Token::RParen) | Some(Token::Semicolon) => {
                    if first {
                        return Err(ParseError::new("expected a polynomial", self.offset()));
                    }
                    break;
                }
                _ => {}
            }
            let term_pos = self.offset();
            let negative = if first {
                match self.peek() {
                    Some(Token::Minus) => {
                        self.next();
                        true
                    }
                    Some(Token::Plus) => {
                        self.next();
                        false
                    }
                    _ => false,
                }
            } else {
                match self.next() {
                    Some(Token::Plus) => false,
                    Some(Token::Minus) => true,
                    Some(t) => {
                        let t = t.clone();
                        return Err(ParseError::new(
                            format!("expected `+` or `-` between terms, found {t}"),
                            term_pos,
                        ));
                    }
                    None => unreachable!(),
                }
            };
            first = false;
            terms.push(self.parse_term(negative)?);
        }
        Ok(PolySyntax { terms })
    }

    fn parse_term(&mut self, negative: bool) -> Result<TermSyntax, ParseError> {
        let position = self.offset();
        let mut numerator = "1".to_string();
        let mut denominator = None;
        let mut powers = Vec::new();

        if let Some(Token::Int(_)) = self.peek() {
            if let Some(Token::Int(n)) = self.next() {
                numerator = n.clone();
            }
            if self.peek() == Some(&Token::Slash) {
                self.next();
                let off = self.offset();
                match self.next() {
                    Some(Token::Int(d)) => denominator = Some(d.clone()),
                    Some(t) => {
                        let t = t.clone();
                        return Err(ParseError::new(
                            format!("expected denominator digits, found {t}"),
                            off,
                        ));
                    }
                    None => {
                        return Err(ParseError::new(
                            "expected denominator digits, found end of input",
                            off,
                        ))
                    }
                }
            }
            // optional `*` joining the coefficient to variables
            if self.peek() == Some(&Token::Star) {
                self.next();
                self.parse_varpow(&mut powers)?;
            } else if matches!(self.peek(), Some(Token::Ident(_))) {
                self.parse_varpow(&mut powers)?;
            }
        } else {
            self.parse_varpow(&mut powers)?;
        }

        while self.peek() == Some(&Token::Star) {
            self.next();
            self.parse_varpow(&mut powers)?;
        }

        Ok(TermSyntax {
            negative,
            numerator,
            denominator,
            powers,
            position,
        })
    }

    fn parse_varpow(&mut self, powers: &mut Vec<(String, u32, usize)>) -> Result<(), ParseError> {
        let off = self.offset();
        let name = match self.next() {
            Some(Token::Ident(s)) => s.clone(),
            Some(t) => {
                let t = t.clone();
                return Err(ParseError::new(
                    format!("expected a variable, found {t}"),
                    off,
                ));
            }
            None => {
                return Err(ParseError::new(
                    "expected a variable, found end of input",
                    off,
                ))
            }
        };
        let exp = if self.peek() == Some(&Token::Caret) {
            self.next();
            self.parse_u32("exponent")?
        } else {
            1
        };
        powers.push((name, exp, off));
        Ok(())
    }
}

/// Parse a polynomial in the grammar above against `ring`.
pub fn parse_polynomial<F: Field>(
    text: &str,
    ring: &Arc<PolyRing<F>>,
) -> Result<Polynomial<F>, ParseError> {
    let syntax = parse_poly_syntax(text)?;
    syntax.instantiate(ring)
}

/// Parse polynomial syntax without a ring (used by the session parser).
pub fn parse_poly_syntax(text: &str) -> Result<PolySyntax, ParseError> {
    let tokens = lex(text)?;
    let mut cur = TokenCursor::new(&tokens, text.len());
    let syntax = cur.parse_poly()?;
    if cur.pos != tokens.len() {
        return Err(ParseError::new(
            "trailing input after polynomial",
            cur.offset(),
        ));
    }
    Ok(syntax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::scalar::{PrimeField, Rationals};

    fn qxyz() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn parses_basic_terms() {
        let r = qxyz();
        let p = parse_polynomial("x*y - z^2", &r).unwrap();
        let expect = r.var(0).mul(&r.var(1)).sub(&r.var(2).pow(2));
        assert_eq!(p, expect);
    }

    #[test]
    fn parses_cubic_sum_mod_3() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let p = parse_polynomial("x^3+y^3+z^3", &r).unwrap();
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p, r.var(0).add(&r.var(1)).add(&r.var(2)).pow(3));
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let r = PolyRing::new(Rationals, vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let err = parse_polynomial("x + w", &r).unwrap_err();
        assert!(err.message.contains("unknown variable `w`"), "{err}");
        assert_eq!(err.position, 4);
    }

    #[test]
    fn characteristic_invalid_literal() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2, vec!["x"], MonomialOrder::GrevLex).unwrap();
        let err = parse_polynomial("1/2*x", &r).unwrap_err();
        assert!(err.message.contains("denominator"), "{err}");
    }

    #[test]
    fn rational_coefficients_and_signs() {
        let r = qxyz();
        let p = parse_polynomial("-3/4*x^2 + 2*y - 1", &r).unwrap();
        assert_eq!(p.to_string(), "-3/4*x^2 + 2*y - 1");
        let q = parse_polynomial("x - x", &r).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn coefficient_merge_and_implicit_star() {
        let r = qxyz();
        assert_eq!(
            parse_polynomial("2x*y", &r).unwrap(),
            parse_polynomial("2*x*y", &r).unwrap()
        );
        // 7*x over F7 collapses to zero
        let f7 = PrimeField::new(7).unwrap();
        let rf = PolyRing::new(f7, vec!["x"], MonomialOrder::GrevLex).unwrap();
        assert!(parse_polynomial("7*x", &rf).unwrap().is_zero());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let r = qxyz();
        let err = parse_polynomial("x + + y", &r).unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_polynomial("x^", &r).unwrap_err();
        assert!(err.message.contains("exponent"));
        let err = parse_polynomial("", &r).unwrap_err();
        assert!(err.message.contains("expected a polynomial"));
    }

    #[test]
    fn render_then_parse_round_trips() {
        let r = qxyz();
        for text in ["x*y - z^2", "-x + 1/2*y^3 - 7", "x^2*y*z + z", "0"] {
            let p = parse_polynomial(text, &r).unwrap();
            let again = parse_polynomial(&p.to_string(), &r).unwrap();
            assert_eq!(p, again);
        }
    }
}
