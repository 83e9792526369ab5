//! The session-file input language.
//!
//! ```text
//! ring R = Q[x,y,z] / (y*z);
//! ideal a = (x, y);
//! assume complete;
//! assume cm;
//! task invariants;
//! task cech box=4 powers=1..3;
//! ```
//!
//! Fields are `Q` or `F<p>`. Exactly one ring and one ideal per session.
//! Polynomials are kept as unresolved syntax here; the runner instantiates
//! them against the concrete coefficient field.

use crate::parse::{lex, ParseError, PolySyntax, Token, TokenCursor};
use crate::scalar::{FieldSpec, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Invariants,
    Corollaries,
    Cech {
        box_bound: i64,
        powers: (usize, usize),
    },
    Toric {
        weights: Vec<Vec<u32>>,
    },
}

/// A parsed session: one ring, one ideal, assumption flags, and tasks.
#[derive(Debug, Clone)]
pub struct Session {
    pub source: String,
    pub ring_name: String,
    pub field: FieldSpec,
    pub variables: Vec<String>,
    pub defining: Vec<PolySyntax>,
    pub ideal_name: String,
    pub ideal_generators: Vec<PolySyntax>,
    pub assume_complete: bool,
    pub assume_cm: bool,
    pub assume_regular: bool,
    pub tasks: Vec<Task>,
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let tokens = lex(text)?;
    let mut cur = TokenCursor::new(&tokens, text.len());

    let mut ring: Option<(String, FieldSpec, Vec<String>, Vec<PolySyntax>)> = None;
    let mut ideal: Option<(String, Vec<PolySyntax>)> = None;
    let mut assume_complete = false;
    let mut assume_cm = false;
    let mut assume_regular = false;
    let mut tasks = Vec::new();

    while let Some(tok) = cur.peek() {
        let stmt_offset = cur.offset();
        let keyword = match tok {
            Token::Ident(s) => s.clone(),
            other => {
                let other = other.clone();
                return Err(ParseError::new(
                    format!("expected a statement keyword, found {other}"),
                    stmt_offset,
                ));
            }
        };
        cur.next();
        match keyword.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(ParseError::new(
                        "exactly one ring declaration is allowed",
                        stmt_offset,
                    ));
                }
                ring = Some(parse_ring_decl(&mut cur)?);
            }
            "ideal" => {
                if ideal.is_some() {
                    return Err(ParseError::new(
                        "exactly one ideal declaration is allowed",
                        stmt_offset,
                    ));
                }
                ideal = Some(parse_ideal_decl(&mut cur)?);
            }
            "assume" => {
                let off = cur.offset();
                match cur.next() {
                    Some(Token::Ident(flag)) => match flag.as_str() {
                        "complete" => assume_complete = true,
                        "cm" => assume_cm = true,
                        "regular" => assume_regular = true,
                        other => {
                            let other = other.to_string();
                            return Err(ParseError::new(
                                format!(
                                    "unknown assumption `{other}` (expected complete, cm or regular)"
                                ),
                                off,
                            ));
                        }
                    },
                    _ => return Err(ParseError::new("expected an assumption name", off)),
                }
                cur.expect(&Token::Semicolon)?;
            }
            "task" => {
                tasks.push(parse_task(&mut cur)?);
            }
            other => {
                return Err(ParseError::new(
                    format!("unknown statement `{other}` (expected ring, ideal, assume or task)"),
                    stmt_offset,
                ));
            }
        }
    }

    let (ring_name, field, variables, defining) =
        ring.ok_or_else(|| ParseError::new("missing ring declaration", text.len()))?;
    let (ideal_name, ideal_generators) =
        ideal.ok_or_else(|| ParseError::new("missing ideal declaration", text.len()))?;
    if tasks.is_empty() {
        return Err(ParseError::new("session declares no tasks", text.len()));
    }
    Ok(Session {
        source: text.to_string(),
        ring_name,
        field,
        variables,
        defining,
        ideal_name,
        ideal_generators,
        assume_complete,
        assume_cm,
        assume_regular,
        tasks,
    })
}

fn parse_ident(cur: &mut TokenCursor, what: &str) -> Result<(String, usize), ParseError> {
    let off = cur.offset();
    match cur.next() {
        Some(Token::Ident(s)) => Ok((s.clone(), off)),
        Some(t) => {
            let t = t.clone();
            Err(ParseError::new(format!("expected {what}, found {t}"), off))
        }
        None => Err(ParseError::new(
            format!("expected {what}, found end of input"),
            off,
        )),
    }
}

fn parse_field_spec(name: &str, offset: usize) -> Result<FieldSpec, ParseError> {
    if name == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(digits) = name.strip_prefix('F') {
        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            let p: u64 = digits
                .parse()
                .map_err(|_| ParseError::new("field characteristic out of range", offset))?;
            PrimeField::new(p)
                .map_err(|e| ParseError::new(format!("bad field spec: {e}"), offset))?;
            return Ok(FieldSpec::PrimeField { characteristic: p });
        }
    }
    Err(ParseError::new(
        format!("bad field spec `{name}` (expected Q or F<p>)"),
        offset,
    ))
}

fn parse_ring_decl(
    cur: &mut TokenCursor,
) -> Result<(String, FieldSpec, Vec<String>, Vec<PolySyntax>), ParseError> {
    let (name, _) = parse_ident(cur, "a ring name")?;
    cur.expect(&Token::Equals)?;
    let (field_name, field_off) = parse_ident(cur, "a field (Q or F<p>)")?;
    let field = parse_field_spec(&field_name, field_off)?;
    cur.expect(&Token::LBracket)?;
    let mut variables = Vec::new();
    loop {
        let (var, _) = parse_ident(cur, "a variable name")?;
        variables.push(var);
        match cur.peek() {
            Some(Token::Comma) => {
                cur.next();
            }
            _ => break,
        }
    }
    cur.expect(&Token::RBracket)?;
    let mut defining = Vec::new();
    if cur.peek() == Some(&Token::Slash) {
        cur.next();
        cur.expect(&Token::LParen)?;
        defining = parse_poly_list(cur)?;
        cur.expect(&Token::RParen)?;
    }
    cur.expect(&Token::Semicolon)?;
    Ok((name, field, variables, defining))
}

fn parse_ideal_decl(cur: &mut TokenCursor) -> Result<(String, Vec<PolySyntax>), ParseError> {
    let (name, _) = parse_ident(cur, "an ideal name")?;
    cur.expect(&Token::Equals)?;
    cur.expect(&Token::LParen)?;
    let generators = parse_poly_list(cur)?;
    cur.expect(&Token::RParen)?;
    cur.expect(&Token::Semicolon)?;
    Ok((name, generators))
}

fn parse_poly_list(cur: &mut TokenCursor) -> Result<Vec<PolySyntax>, ParseError> {
    let mut polys = vec![cur.parse_poly()?];
    while cur.peek() == Some(&Token::Comma) {
        cur.next();
        polys.push(cur.parse_poly()?);
    }
    Ok(polys)
}

fn expect_keyword(cur: &mut TokenCursor, word: &str) -> Result<(), ParseError> {
    let off = cur.offset();
    match cur.next() {
        Some(Token::Ident(s)) if s == word => Ok(()),
        _ => Err(ParseError::new(format!("expected `{word}`"), off)),
    }
}

fn parse_usize(cur: &mut TokenCursor, what: &str) -> Result<usize, ParseError> {
    let off = cur.offset();
    match cur.next() {
        Some(Token::Int(s)) => s
            .parse::<usize>()
            .map_err(|_| ParseError::new(format!("{what} out of range"), off)),
        _ => Err(ParseError::new(format!("expected {what}"), off)),
    }
}

fn parse_task(cur: &mut TokenCursor) -> Result<Task, ParseError> {
    let (kind, off) = parse_ident(cur, "a task kind")?;
    let task = match kind.as_str() {
        "invariants" => Task::Invariants,
        "corollaries" => Task::Corollaries,
        "cech" => {
            expect_keyword(cur, "box")?;
            cur.expect(&Token::Equals)?;
            let box_bound = parse_usize(cur, "a box bound")? as i64;
            expect_keyword(cur, "powers")?;
            cur.expect(&Token::Equals)?;
            let lo = parse_usize(cur, "a power")?;
            cur.expect(&Token::DotDot)?;
            let hi = parse_usize(cur, "a power")?;
            if lo < 1 || hi < lo {
                return Err(ParseError::new("powers must satisfy 1 <= a <= b", off));
            }
            Task::Cech {
                box_bound,
                powers: (lo, hi),
            }
        }
        "toric" => {
            expect_keyword(cur, "weights")?;
            cur.expect(&Token::Equals)?;
            let mut weights = vec![parse_weight(cur)?];
            while cur.peek() == Some(&Token::Comma) {
                cur.next();
                weights.push(parse_weight(cur)?);
            }
            if weights.iter().any(|w| w.len() != weights[0].len()) {
                return Err(ParseError::new(
                    "weight vectors must have equal length",
                    off,
                ));
            }
            Task::Toric { weights }
        }
        other => {
            return Err(ParseError::new(
                format!("unknown task `{other}` (expected invariants, corollaries, cech or toric)"),
                off,
            ));
        }
    };
    cur.expect(&Token::Semicolon)?;
    Ok(task)
}

fn parse_weight(cur: &mut TokenCursor) -> Result<Vec<u32>, ParseError> {
    cur.expect(&Token::LParen)?;
    let mut weight = Vec::new();
    loop {
        let off = cur.offset();
        match cur.next() {
            Some(Token::Int(s)) => {
                let v: u32 = s
                    .parse()
                    .map_err(|_| ParseError::new("weight out of range", off))?;
                weight.push(v);
            }
            _ => return Err(ParseError::new("expected a weight entry", off)),
        }
        match cur.peek() {
            Some(Token::Comma) => {
                cur.next();
            }
            _ => break,
        }
    }
    cur.expect(&Token::RParen)?;
    Ok(weight)
}
