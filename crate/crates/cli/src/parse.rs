//! Parsing of polynomials in `h` and of scalar literals.
//!
//! The accepted language is ordinary arithmetic over integers, `zeta(n)` and
//! `h`, with `+ - * / ^` and parentheses:
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := int | 'zeta(' int ')' | 'h' | '(' expr ')'
//! ```
//!
//! It contains the canonical forms printed by the core types, so anything
//! printed can be read back.

use std::fmt;
use std::sync::Arc;

use gdua_core::{CycloNumber, CyclotomicField, MonomialScalar, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

fn err<T>(offset: usize, message: impl Into<String>) -> PResult<T> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Zeta,
    H,
    Op(char),
    End,
}

fn tokenize(text: &str) -> PResult<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
            }
            b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')' => {
                out.push((i, Tok::Op(c as char)));
                i += 1;
            }
            b'h' if !bytes.get(i + 1).is_some_and(u8::is_ascii_alphanumeric) => {
                out.push((i, Tok::H));
                i += 1;
            }
            _ if text[i..].starts_with("zeta") => {
                out.push((i, Tok::Zeta));
                i += 4;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return err(i, format!("unexpected character {ch:?}"));
            }
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Int(Rational),
    Zeta(u32),
    H,
    Neg(Box<Ast>),
    Bin(char, Box<Ast>, Box<Ast>, usize),
    Pow(Box<Ast>, i64, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn eat(&mut self, op: char) -> bool {
        if *self.peek() == Tok::Op(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> PResult<()> {
        if self.eat(op) {
            Ok(())
        } else {
            err(self.offset(), format!("expected '{op}'"))
        }
    }

    fn int(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => err(self.offset(), "expected an integer"),
        }
    }

    fn expr(&mut self) -> PResult<Ast> {
        let mut acc = if self.eat('-') {
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            let at = self.offset();
            let op = match self.peek() {
                Tok::Op(c @ ('+' | '-')) => *c,
                _ => return Ok(acc),
            };
            self.pos += 1;
            acc = Ast::Bin(op, Box::new(acc), Box::new(self.term()?), at);
        }
    }

    fn term(&mut self) -> PResult<Ast> {
        let mut acc = self.factor()?;
        loop {
            let at = self.offset();
            let op = match self.peek() {
                Tok::Op(c @ ('*' | '/')) => *c,
                _ => return Ok(acc),
            };
            self.pos += 1;
            acc = Ast::Bin(op, Box::new(acc), Box::new(self.factor()?), at);
        }
    }

    fn factor(&mut self) -> PResult<Ast> {
        let base = self.atom()?;
        let at = self.offset();
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let digits_at = self.offset();
        let e: i64 = self
            .int()?
            .parse()
            .or_else(|_| err(digits_at, "exponent out of range"))?;
        Ok(Ast::Pow(Box::new(base), if negative { -e } else { e }, at))
    }

    fn atom(&mut self) -> PResult<Ast> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.pos += 1;
                Ok(Ast::Int(s.parse().expect("digits")))
            }
            Tok::H => {
                self.pos += 1;
                Ok(Ast::H)
            }
            Tok::Zeta => {
                self.pos += 1;
                self.expect('(')?;
                let n_at = self.offset();
                let n: u32 = self.int()?.parse().or_else(|_| err(n_at, "root order out of range"))?;
                if n == 0 || n > MAX_ORDER {
                    return err(n_at, format!("root order must be between 1 and {MAX_ORDER}"));
                }
                self.expect(')')?;
                Ok(Ast::Zeta(n))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::End => err(at, "unexpected end of input"),
            Tok::Op(c) => err(at, format!("unexpected '{c}'")),
        }
    }
}

const MAX_ORDER: u32 = 10_000;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn orders(ast: &Ast, out: &mut Vec<u32>) {
    match ast {
        Ast::Zeta(n) => out.push(*n),
        Ast::Neg(a) | Ast::Pow(a, ..) => orders(a, out),
        Ast::Bin(_, a, b, _) => {
            orders(a, out);
            orders(b, out);
        }
        Ast::Int(_) | Ast::H => {}
    }
}

fn eval(ast: &Ast, field: &Arc<CyclotomicField>, allow_h: bool) -> PResult<Poly> {
    Ok(match ast {
        Ast::Int(q) => Poly::constant(CycloNumber::from_rational(field, q.clone())),
        Ast::Zeta(n) => {
            let step = (field.order() / n) as i64;
            Poly::constant(CycloNumber::zeta_power(field, step))
        }
        Ast::H if allow_h => Poly::h(field),
        Ast::H => return err(0, "'h' is not allowed in a scalar"),
        Ast::Neg(a) => -&eval(a, field, allow_h)?,
        Ast::Bin(op, a, b, at) => {
            let (x, y) = (eval(a, field, allow_h)?, eval(b, field, allow_h)?);
            match op {
                '+' => &x + &y,
                '-' => &x - &y,
                '*' => &x * &y,
                _ => {
                    if !y.is_constant() {
                        return err(*at, "division by a non-constant");
                    }
                    let inv = y.coeff(0).inv().or_else(|_| err(*at, "division by zero"))?;
                    x.scale(&inv)
                }
            }
        }
        Ast::Pow(a, e, at) => {
            let x = eval(a, field, allow_h)?;
            if *e >= 0 {
                let e = u32::try_from(*e).or_else(|_| err(*at, "exponent out of range"))?;
                if e > 4096 {
                    return err(*at, "exponent out of range");
                }
                x.pow(e)
            } else if x.is_constant() {
                let c = x.coeff(0).pow(*e).or_else(|_| err(*at, "zero to a negative power"))?;
                Poly::constant(c)
            } else {
                return err(*at, "negative power of a non-constant");
            }
        }
    })
}

fn parse_ast(text: &str) -> PResult<(Ast, Arc<CyclotomicField>)> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return err(p.offset(), "unexpected trailing input");
    }
    let mut os = Vec::new();
    orders(&ast, &mut os);
    let lcm = os.iter().try_fold(1u64, |acc, &n| {
        let g = gcd(acc, n as u64);
        Some(acc / g * n as u64).filter(|&l| l <= MAX_ORDER as u64)
    });
    if lcm.is_none() {
        return err(0, format!("combined root order exceeds {MAX_ORDER}"));
    }
    Ok((ast, CyclotomicField::common(os)))
}

/// A polynomial in `h` with cyclotomic coefficients.
pub fn parse_poly(text: &str) -> PResult<Poly> {
    let (ast, field) = parse_ast(text)?;
    eval(&ast, &field, true)
}

/// A parsed scalar literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    /// A nonzero value of the form `q·ζ` with `q > 0` rational.
    Monomial(MonomialScalar),
    Cyclo(CycloNumber),
}

impl Scalar {
    pub fn to_cyclo(&self) -> CycloNumber {
        match self {
            Scalar::Monomial(m) => m
                .to_cyclo(&CyclotomicField::new(m.root_order()))
                .expect("own order"),
            Scalar::Cyclo(c) => c.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Monomial(m) => write!(f, "{m}"),
            Scalar::Cyclo(c) => write!(f, "{c}"),
        }
    }
}

/// A scalar, reported as a [`MonomialScalar`] whenever it is one.
pub fn parse_scalar(text: &str) -> PResult<Scalar> {
    let (ast, field) = parse_ast(text)?;
    let first_h = tokenize(text)?
        .into_iter()
        .find(|(_, t)| *t == Tok::H)
        .map(|(at, _)| at);
    if let Some(at) = first_h {
        return err(at, "'h' is not allowed in a scalar");
    }
    let c = eval(&ast, &field, false)?.coeff(0);
    Ok(match c.as_monomial() {
        Some(m) => Scalar::Monomial(m),
        None => Scalar::Cyclo(c),
    })
}
