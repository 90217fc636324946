//! Text syntax for atoms, propositions, states and spans.
//!
//! ```text
//! expr   := term ('^' term)*
//! term   := factor ('&' factor)*
//! factor := atom | '(' expr ')'
//! atom   := ('A' | 'B') '.' ('x' | 'y' | 'z') '.' ('up' | 'down')
//! ```
//!
//! `&` is conjunction and binds tighter than `^` (exclusive or).

use gappy_core::{Atom, Axis, Direction, GaussianRational, Particle, Proposition, StateVector, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {offset} in {input:?}")]
pub struct SyntaxError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

fn error(input: &str, offset: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError { input: input.to_string(), offset, message: message.into() }
}

pub fn parse_axis(s: &str) -> Option<Axis> {
    match s {
        "x" => Some(Axis::X),
        "y" => Some(Axis::Y),
        "z" => Some(Axis::Z),
        _ => None,
    }
}

pub fn parse_direction(s: &str) -> Option<Direction> {
    match s {
        "up" => Some(Direction::Up),
        "down" => Some(Direction::Down),
        _ => None,
    }
}

pub fn parse_atom(s: &str) -> Result<Atom, SyntaxError> {
    let trimmed = s.trim();
    let parts: Vec<&str> = trimmed.split('.').collect();
    let [p, a, d] = parts.as_slice() else {
        return Err(error(s, 0, "expected an atom like A.z.up"));
    };
    let particle = match *p {
        "A" => Particle::A,
        "B" => Particle::B,
        _ => return Err(error(s, 0, format!("unknown particle {p:?}"))),
    };
    let axis = parse_axis(a).ok_or_else(|| error(s, p.len() + 1, format!("unknown axis {a:?}")))?;
    let direction =
        parse_direction(d).ok_or_else(|| error(s, p.len() + a.len() + 2, format!("unknown direction {d:?}")))?;
    Ok(Atom::new(particle, axis, direction))
}

/// Comma-separated atoms, e.g. `B.z.down,B.x.up`.
pub fn parse_atom_list(s: &str) -> Result<Vec<Atom>, SyntaxError> {
    if s.trim().is_empty() {
        return Err(error(s, 0, "empty atom list"));
    }
    s.split(',').map(parse_atom).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(Atom),
    And,
    Xor,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '&' => {
                out.push((i, Token::And));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Xor));
                i += 1;
            }
            '(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            _ => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'.') {
                    i += 1;
                }
                if i == start {
                    return Err(error(input, start, format!("unexpected character {c:?}")));
                }
                let atom = parse_atom(&input[start..i]).map_err(|e| error(input, start + e.offset, e.message))?;
                out.push((start, Token::Atom(atom)));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.input.len(), |(o, _)| *o)
    }

    fn expr(&mut self) -> Result<Proposition, SyntaxError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Token::Xor) {
            self.pos += 1;
            lhs = lhs.xor(self.term()?);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Proposition, SyntaxError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = lhs.and(self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Proposition, SyntaxError> {
        let offset = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Atom(a)) => {
                self.pos += 1;
                Ok(Proposition::Atom(a))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(error(self.input, self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(error(self.input, offset, "expected an atom or '('")),
            None => Err(error(self.input, offset, "unexpected end of input")),
        }
    }
}

pub fn parse_proposition(input: &str) -> Result<Proposition, SyntaxError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { input, tokens, pos: 0 };
    let prop = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(error(input, parser.offset(), "trailing input"));
    }
    Ok(prop)
}

fn parse_entries(input: &str, body: &str, base: usize) -> Result<Vec<GaussianRational>, SyntaxError> {
    let mut offset = base;
    let mut out = Vec::new();
    for piece in body.split(',') {
        let x = piece
            .parse::<GaussianRational>()
            .map_err(|_| error(input, offset, format!("invalid scalar {:?}", piece.trim())))?;
        out.push(x);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Raw entries `0,1,-1/2,i`; may be all zero.
pub fn parse_entries_list(input: &str) -> Result<Vec<GaussianRational>, SyntaxError> {
    let body = input.trim();
    let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(body);
    parse_entries(input, body, 0)
}

/// A state as comma-separated scalars, optionally bracketed.
pub fn parse_state(input: &str) -> Result<StateVector, SyntaxError> {
    StateVector::new(parse_entries_list(input)?).map_err(|e| error(input, 0, e.to_string()))
}

/// A span literal: `span{[0,1,0,0],[0,0,1,0]}`, `[0,1,0,0],[0,0,1,0]`, or
/// `span{}` given an ambient dimension.
pub fn parse_span(input: &str, ambient_dim: usize) -> Result<Subspace, SyntaxError> {
    let trimmed = input.trim();
    let body = trimmed.strip_prefix("span{").and_then(|b| b.strip_suffix('}')).unwrap_or(trimmed).trim();
    let mut vectors = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let offset = input.len() - rest.len();
        let Some(after_open) = rest.strip_prefix('[') else {
            return Err(error(input, offset, "expected '['"));
        };
        let Some(close) = after_open.find(']') else {
            return Err(error(input, offset, "unclosed '['"));
        };
        let entries = parse_entries(input, &after_open[..close], offset + 1)?;
        if entries.len() != ambient_dim {
            return Err(error(input, offset, format!("vector has {} entries, expected {ambient_dim}", entries.len())));
        }
        if let Ok(v) = StateVector::new(entries) {
            vectors.push(v);
        }
        rest = after_open[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Subspace::span(ambient_dim, &vectors).map_err(|e| error(input, 0, e.to_string()))
}
