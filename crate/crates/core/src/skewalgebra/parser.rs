//! Expression parser for words in `d`, `u` with field-element scalars.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" "-"? integer)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Division is only allowed by scalars; `-1/2` is the rational literal
//! spelled with the division operator. Identifiers are `d`, `u`, `alpha`,
//! `beta`, `gamma`, `eta` (also the Greek letters) and the generator name of
//! the number field.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{AlgebraElement, Params};
use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, NumberField, QPoly, Rational};

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
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: i, message: format!("unexpected character '{other}'") });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    Ident(usize, String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(usize, Box<Expr>, Box<Expr>),
    Pow(usize, Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), message: message.to_string() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.pos += 1;
                    lhs = Expr::Div(at, Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.here();
        self.pos += 1;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let Some(Tok::Int(n)) = self.peek().cloned() else { return self.err("expected integer exponent") };
        self.pos += 1;
        let n: i64 = match i64::try_from(n) {
            Ok(n) if n <= 4096 => n,
            _ => return Err(Error::Syntax { pos: at, message: "exponent too large".into() }),
        };
        Ok(Expr::Pow(at, Box::new(base), if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Ident(at, name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.err("expected a number, identifier or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_ast(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Syntax { pos: 0, message: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: src.chars().count() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected token (juxtaposition needs an explicit '*')");
    }
    Ok(e)
}

/// Values an evaluator computes with.
trait Domain: Sized + Clone {
    fn int(&self, n: &BigInt) -> Result<Self>;
    fn ident(&self, pos: usize, name: &str) -> Result<Self>;
    fn add(self, rhs: Self) -> Result<Self>;
    fn sub(self, rhs: Self) -> Result<Self>;
    fn mul(self, rhs: Self) -> Result<Self>;
    fn neg(self) -> Result<Self>;
    /// `self / rhs`; `None` when `rhs` is not an invertible scalar.
    fn div(self, rhs: Self) -> Result<Option<Self>>;
    fn pow(self, e: i64) -> Result<Option<Self>>;
}

fn eval<D: Domain>(ctx: &D, e: &Expr) -> Result<D> {
    Ok(match e {
        Expr::Int(n) => ctx.int(n)?,
        Expr::Ident(pos, name) => ctx.ident(*pos, name)?,
        Expr::Neg(a) => eval(ctx, a)?.neg()?,
        Expr::Add(a, b) => eval(ctx, a)?.add(eval(ctx, b)?)?,
        Expr::Sub(a, b) => eval(ctx, a)?.sub(eval(ctx, b)?)?,
        Expr::Mul(a, b) => eval(ctx, a)?.mul(eval(ctx, b)?)?,
        Expr::Div(pos, a, b) => match eval(ctx, a)?.div(eval(ctx, b)?)? {
            Some(v) => v,
            None => return Err(Error::Syntax { pos: *pos, message: "division needs a nonzero scalar divisor".into() }),
        },
        Expr::Pow(pos, a, n) => match eval(ctx, a)?.pow(*n)? {
            Some(v) => v,
            None => return Err(Error::Syntax { pos: *pos, message: "negative power of a non-scalar or of zero".into() }),
        },
    })
}

#[derive(Clone)]
enum AlgValue {
    Scalar(FieldElement),
    Elem(AlgebraElement),
}

struct AlgCtx<'a> {
    params: &'a Params,
}

fn scalar_ident(field: &NumberField, params: Option<&Params>, name: &str) -> Option<FieldElement> {
    if let Some(p) = params {
        match name {
            "alpha" | "\u{03b1}" => return Some(p.alpha().clone()),
            "beta" | "\u{03b2}" => return Some(p.beta().clone()),
            "gamma" | "\u{03b3}" => return Some(p.gamma().clone()),
            "eta" | "\u{03b7}" => return Some(p.eta().clone()),
            _ => {}
        }
    }
    (!field.is_rationals() && name == field.name()).then(|| field.generator())
}

fn int_elem(field: &NumberField, n: &BigInt) -> FieldElement {
    field.from_rational(Rational::from_integer(n.clone()))
}

impl AlgCtx<'_> {
    fn lift(&self, v: AlgValue) -> AlgebraElement {
        match v {
            AlgValue::Elem(e) => e,
            AlgValue::Scalar(c) => AlgebraElement::scalar(self.params, &c),
        }
    }

    fn eval(&self, e: &Expr) -> Result<AlgValue> {
        let p = self.params;
        Ok(match e {
            Expr::Int(n) => AlgValue::Scalar(int_elem(p.field(), n)),
            Expr::Ident(pos, name) => match name.as_str() {
                "d" => AlgValue::Elem(AlgebraElement::d(p)),
                "u" => AlgValue::Elem(AlgebraElement::u(p)),
                other => match scalar_ident(p.field(), Some(p), other) {
                    Some(c) => AlgValue::Scalar(c),
                    None => return Err(Error::Syntax { pos: *pos, message: format!("unknown identifier '{other}'") }),
                },
            },
            Expr::Neg(a) => match self.eval(a)? {
                AlgValue::Scalar(c) => AlgValue::Scalar(-c),
                v => AlgValue::Elem(self.lift(v).neg()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let sub = matches!(e, Expr::Sub(..));
                match (x, y) {
                    (AlgValue::Scalar(c1), AlgValue::Scalar(c2)) => {
                        AlgValue::Scalar(if sub { &c1 - &c2 } else { &c1 + &c2 })
                    }
                    (x, y) => {
                        let (x, y) = (self.lift(x), self.lift(y));
                        AlgValue::Elem(if sub { x.sub(&y)? } else { x.add(&y)? })
                    }
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (AlgValue::Scalar(c1), AlgValue::Scalar(c2)) => AlgValue::Scalar(&c1 * &c2),
                (AlgValue::Scalar(c), y) | (y, AlgValue::Scalar(c)) => AlgValue::Elem(self.lift(y).scale(&c)),
                (x, y) => AlgValue::Elem(self.lift(x).mul(&self.lift(y))?),
            },
            Expr::Div(pos, a, b) => {
                let AlgValue::Scalar(c) = self.eval(b)? else {
                    return Err(Error::Syntax { pos: *pos, message: "division needs a nonzero scalar divisor".into() });
                };
                let inv = c.inv().map_err(|_| Error::Syntax { pos: *pos, message: "division by zero".into() })?;
                match self.eval(a)? {
                    AlgValue::Scalar(x) => AlgValue::Scalar(&x * &inv),
                    v => AlgValue::Elem(self.lift(v).scale(&inv)),
                }
            }
            Expr::Pow(pos, a, n) => match self.eval(a)? {
                AlgValue::Scalar(c) => AlgValue::Scalar(
                    c.powi(*n).map_err(|_| Error::Syntax { pos: *pos, message: "negative power of zero".into() })?,
                ),
                v => {
                    if *n < 0 {
                        return Err(Error::Syntax { pos: *pos, message: "negative power of a non-scalar".into() });
                    }
                    AlgValue::Elem(self.lift(v).pow(*n as u32))
                }
            },
        })
    }
}

/// Parses `src` and reduces it to graded normal form in `A(params)`.
pub fn parse_expression(params: &Params, src: &str) -> Result<AlgebraElement> {
    let ast = parse_ast(src)?;
    let ctx = AlgCtx { params };
    let v = ctx.eval(&ast)?;
    Ok(ctx.lift(v))
}

/// Field-element evaluation with no algebra generators.
#[derive(Clone)]
struct ScalarVal<'a> {
    field: &'a NumberField,
    params: Option<&'a Params>,
    value: FieldElement,
}

impl Domain for ScalarVal<'_> {
    fn int(&self, n: &BigInt) -> Result<Self> {
        Ok(ScalarVal { value: int_elem(self.field, n), ..self.clone() })
    }

    fn ident(&self, pos: usize, name: &str) -> Result<Self> {
        match scalar_ident(self.field, self.params, name) {
            Some(value) => Ok(ScalarVal { value, ..self.clone() }),
            None => Err(Error::Syntax { pos, message: format!("unknown identifier '{name}'") }),
        }
    }

    fn add(self, rhs: Self) -> Result<Self> {
        Ok(ScalarVal { value: &self.value + &rhs.value, ..self })
    }

    fn sub(self, rhs: Self) -> Result<Self> {
        Ok(ScalarVal { value: &self.value - &rhs.value, ..self })
    }

    fn mul(self, rhs: Self) -> Result<Self> {
        Ok(ScalarVal { value: &self.value * &rhs.value, ..self })
    }

    fn neg(self) -> Result<Self> {
        Ok(ScalarVal { value: -&self.value, ..self })
    }

    fn div(self, rhs: Self) -> Result<Option<Self>> {
        Ok(rhs.value.inv().ok().map(|inv| ScalarVal { value: &self.value * &inv, ..self }))
    }

    fn pow(self, e: i64) -> Result<Option<Self>> {
        Ok(self.value.powi(e).ok().map(|value| ScalarVal { value, ..self }))
    }
}

/// Parses a field element such as `-1/2`, `1 + w` or `w^2` in `field`.
pub fn parse_scalar(field: &NumberField, src: &str) -> Result<FieldElement> {
    let ast = parse_ast(src)?;
    let ctx = ScalarVal { field, params: None, value: field.zero() };
    Ok(eval(&ctx, &ast)?.value)
}

/// Univariate rational polynomial evaluation in a named variable.
#[derive(Clone)]
struct PolyVal<'a> {
    var: &'a str,
    value: QPoly,
}

impl Domain for PolyVal<'_> {
    fn int(&self, n: &BigInt) -> Result<Self> {
        Ok(PolyVal { value: QPoly::constant(Rational::from_integer(n.clone())), ..self.clone() })
    }

    fn ident(&self, pos: usize, name: &str) -> Result<Self> {
        if name == self.var {
            Ok(PolyVal { value: QPoly::from_ints(&[0, 1]), ..self.clone() })
        } else {
            Err(Error::Syntax { pos, message: format!("unknown identifier '{name}'") })
        }
    }

    fn add(self, rhs: Self) -> Result<Self> {
        Ok(PolyVal { value: self.value.add(&rhs.value), ..self })
    }

    fn sub(self, rhs: Self) -> Result<Self> {
        Ok(PolyVal { value: self.value.sub(&rhs.value), ..self })
    }

    fn mul(self, rhs: Self) -> Result<Self> {
        Ok(PolyVal { value: self.value.mul(&rhs.value), ..self })
    }

    fn neg(self) -> Result<Self> {
        Ok(PolyVal { value: self.value.neg(), ..self })
    }

    fn div(self, rhs: Self) -> Result<Option<Self>> {
        match rhs.value.degree() {
            Some(0) => {
                let c = rhs.value.coeff(0).recip();
                Ok(Some(PolyVal { value: self.value.scale(&c), ..self }))
            }
            _ => Ok(None),
        }
    }

    fn pow(self, e: i64) -> Result<Option<Self>> {
        if e < 0 {
            return Ok(None);
        }
        Ok(Some(PolyVal { value: self.value.pow(e as u32), ..self }))
    }
}

/// Parses a polynomial with rational coefficients in the variable `var`,
/// e.g. `t^2 + t + 1`.
pub fn parse_polynomial(src: &str, var: &str) -> Result<QPoly> {
    let ast = parse_ast(src)?;
    let ctx = PolyVal { var, value: QPoly::zero() };
    Ok(eval(&ctx, &ast)?.value)
}
