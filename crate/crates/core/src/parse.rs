//! Polynomial expression grammar and printer.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary ("*" unary)*
//! unary   := ("-" | "+") unary | power
//! power   := atom ("^" INT)?
//! atom    := INT ("/" INT)? | IDENT | "(" expr ")"
//! ```
//!
//! `/` only appears inside a rational literal and implicit multiplication
//! (`2x`, `x y`) is rejected.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::polyring::{scalar, Monomial, PolyError, Polynomial, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
    line: usize,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), col));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), col));
                continue;
            }
            other => {
                return Err(PolyError::Parse { line, column: col, message: format!("unexpected character {other:?}") })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, text.len() + 1));
    Ok(out)
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        self.err_at(self.col(), message)
    }

    fn err_at<T>(&self, column: usize, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { line: self.line, column, message: message.into() })
    }

    fn arity(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        match self.bump() {
            Tok::Int(e) => {
                let Ok(e) = u32::try_from(&e) else {
                    return self.err("exponent too large");
                };
                if *self.peek() == Tok::Caret {
                    return self.err("chained exponents need parentheses");
                }
                Ok(base.pow(e))
            }
            _ => self.err_at(col, "expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let col = self.col();
        let poly = match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let col = self.col();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() => {
                            Polynomial::constant(self.arity(), Scalar::new(n, d))
                        }
                        Tok::Int(_) => return self.err_at(col, "zero denominator"),
                        _ => return self.err_at(col, "expected an integer denominator"),
                    }
                } else {
                    Polynomial::constant(self.arity(), Scalar::from_integer(n))
                }
            }
            Tok::Ident(name) => match self.names.iter().position(|v| *v == name) {
                Some(i) => Polynomial::var(self.arity(), i),
                None => {
                    return Err(PolyError::Parse {
                        line: self.line,
                        column: col,
                        message: format!("unknown variable {name:?}"),
                    })
                }
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.bump();
                inner
            }
            Tok::End => return self.err_at(col, "unexpected end of expression"),
            other => return self.err_at(col, format!("unexpected {}", describe(&other))),
        };
        match self.peek() {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => self.err("implicit multiplication is not allowed"),
            Tok::Slash => self.err("'/' is only allowed in rational literals like 3/4"),
            _ => Ok(poly),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::Ident(_) => "identifier",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parses one expression; errors report `line` and a 1-based column.
pub fn parse_polynomial_at(text: &str, names: &[String], line: usize) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text, line)?;
    let mut p = Parser { toks, pos: 0, names, line };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err(format!("unexpected {}", describe(p.peek())));
    }
    Ok(poly)
}

pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial, PolyError> {
    parse_polynomial_at(text, names, 1)
}

/// Parses a monomial written as an expression (`x^3*y`) and checks it is a
/// bare monomial with coefficient 1.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Monomial, PolyError> {
    let p = parse_polynomial(text, names)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(PolyError::Parse { line: 1, column: 1, message: format!("{text:?} is not a monomial") }),
    }
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Renders terms in descending grevlex order, e.g. `x^2 - 1/2*x*y + 3`.
pub fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&scalar::to_display(&mag));
        } else if mag.is_one() {
            out.push_str(&format_monomial(m, names));
        } else {
            out.push_str(&scalar::to_display(&mag));
            out.push('*');
            out.push_str(&format_monomial(m, names));
        }
    }
    out
}
