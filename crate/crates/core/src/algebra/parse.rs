//! Expression front end.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers start with a letter or `_` and may contain letters, digits,
//! `_` and `'`. Whitespace is ignored. `^` binds tighter than unary minus,
//! so `-x^2` is `-(x^2)`.

use num_bigint::BigInt;

use super::field_elem::FieldElem;
use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use super::param_field::ParamField;
use super::poly::Ring;
use super::ratfn::RatFn;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'')
            {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|p| p.1).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse {
                pos,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, AlgebraError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, AlgebraError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let e: i32 = match i32::try_from(&n) {
                    Ok(e) if e <= 1000 => e,
                    _ => return self.err("exponent too large"),
                };
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, AlgebraError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Every identifier, in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    /// Evaluate with `vars` as curve variables and the field's params as
    /// coefficients.
    pub fn eval(&self, field: &ParamField, vars: &[&str]) -> Result<RatFn, AlgebraError> {
        Ok(match self {
            Expr::Int(n) => RatFn::constant(FieldElem::from_int(n.clone())),
            Expr::Sym(s) => {
                if let Some(i) = vars.iter().position(|v| v == s) {
                    RatFn::var(i)
                } else {
                    RatFn::constant(field.param(s)?)
                }
            }
            Expr::Neg(a) => a.eval(field, vars)?.neg(),
            Expr::Add(a, b) => a.eval(field, vars)?.add(&b.eval(field, vars)?),
            Expr::Sub(a, b) => a.eval(field, vars)?.sub(&b.eval(field, vars)?),
            Expr::Mul(a, b) => a.eval(field, vars)?.mul(&b.eval(field, vars)?),
            Expr::Div(a, b) => a.eval(field, vars)?.div(&b.eval(field, vars)?)?,
            Expr::Pow(a, e) => a.eval(field, vars)?.pow(*e)?,
        })
    }
}

/// Parse an element of `K`.
pub fn parse_field_elem(src: &str, field: &ParamField) -> Result<FieldElem, AlgebraError> {
    let f = parse_expr(src)?.eval(field, &[])?;
    let n = f.numerator().as_constant().unwrap_or_else(FieldElem::zero);
    let d = f.denominator().as_constant().unwrap_or_else(FieldElem::one);
    n.div(&d)
}

/// Parse a polynomial in `vars` over `K`.
pub fn parse_poly(src: &str, field: &ParamField, vars: &[&str]) -> Result<MultiPoly, AlgebraError> {
    let f = parse_expr(src)?.eval(field, vars)?.simplify();
    match f.denominator().as_constant() {
        Some(d) => Ok(f.numerator().scale(&d.inv()?)),
        None => Err(AlgebraError::NotPolynomial(src.to_string())),
    }
}

/// Parse a polynomial allowing negative powers of the variables (a Laurent
/// polynomial). Fails if a non-monomial denominator survives.
pub fn parse_laurent(src: &str, field: &ParamField, vars: &[&str]) -> Result<MultiPoly, AlgebraError> {
    let f = parse_expr(src)?.eval(field, vars)?.simplify();
    let den = f.denominator();
    if den.len() != 1 {
        return Err(AlgebraError::NotPolynomial(src.to_string()));
    }
    let (m, c) = den.leading().expect("nonzero");
    let inv = Monomial::one().div(m);
    Ok(f.numerator().mul_term(&inv, &c.inv()?))
}

pub fn parse_ratfn(src: &str, field: &ParamField, vars: &[&str]) -> Result<RatFn, AlgebraError> {
    parse_expr(src)?.eval(field, vars)
}
