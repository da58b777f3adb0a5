//! Arithmetic expressions over named symbols, e.g. `(x^3+1)^2/(4x^3)` or `3*w^2 - 5`.
//!
//! Parsing produces an [`Expr`] tree; evaluation goes through an [`ExprDomain`]
//! that decides what the symbols mean (field generator, `x`, `y`, ...).

use std::fmt;

use crate::curves::FfElem;
use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElement, Rational};
use crate::polyalg::RationalFunction;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
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
            let text: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|p| p.1).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else if c == '−' {
            out.push((pos, Tok::Op('-')));
            i += 1;
        } else if c == '·' {
            out.push((pos, Tok::Op('*')));
            i += 1;
        } else {
            return Err(Error::Parse { offset: pos, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.len)
    }

    fn err<T>(&self, m: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: m.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let v = match self.peek() {
            Some(Tok::Num(n)) => {
                let n: i64 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                self.pos += 1;
                n
            }
            _ => return self.err("expected an integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of expression"),
        }
    }
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser { toks: tokenize(s)?, pos: 0, len: s.len() };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Sym(s) => out.push(s.clone()),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    pub fn eval<D: ExprDomain>(&self, d: &D) -> Result<D::Value> {
        match self {
            Expr::Num(r) => Ok(d.constant(r)),
            Expr::Sym(s) => d.symbol(s),
            Expr::Neg(a) => Ok(d.neg(&a.eval(d)?)),
            Expr::Add(a, b) => Ok(d.add(&a.eval(d)?, &b.eval(d)?)),
            Expr::Sub(a, b) => Ok(d.sub(&a.eval(d)?, &b.eval(d)?)),
            Expr::Mul(a, b) => Ok(d.mul(&a.eval(d)?, &b.eval(d)?)),
            Expr::Div(a, b) => d.div(&a.eval(d)?, &b.eval(d)?),
            Expr::Pow(a, e) => {
                let base = a.eval(d)?;
                let mut acc = d.constant(&Rational::from_integer(1.into()));
                for _ in 0..e.unsigned_abs() {
                    acc = d.mul(&acc, &base);
                }
                if *e < 0 {
                    acc = d.div(&d.constant(&Rational::from_integer(1.into())), &acc)?;
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a})*({b})"),
            Expr::Div(a, b) => write!(f, "({a})/({b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

/// Interpretation of literals, symbols and operations.
pub trait ExprDomain {
    type Value: Clone;
    fn constant(&self, r: &Rational) -> Self::Value;
    fn symbol(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
}

fn unknown(name: &str) -> Error {
    Error::InvalidInput(format!("unknown symbol {name:?}"))
}

/// Elements of a number field; the only symbol is the generator's name.
pub struct FieldDomain<'a>(pub &'a Field);

impl ExprDomain for FieldDomain<'_> {
    type Value = FieldElement;
    fn constant(&self, r: &Rational) -> FieldElement {
        FieldElement::from_rational(self.0, r.clone())
    }
    fn symbol(&self, name: &str) -> Result<FieldElement> {
        if !self.0.is_rational() && name == self.0.generator_name() {
            Ok(self.0.generator())
        } else {
            Err(unknown(name))
        }
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a - b
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a.clone()
    }
    fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.try_div(b)
    }
}

/// Rational functions in one variable over a number field.
pub struct RatFunDomain<'a> {
    pub field: &'a Field,
    pub var: &'a str,
}

impl ExprDomain for RatFunDomain<'_> {
    type Value = RationalFunction<FieldElement>;
    fn constant(&self, r: &Rational) -> Self::Value {
        RationalFunction::constant(FieldElement::from_rational(self.field, r.clone()))
    }
    fn symbol(&self, name: &str) -> Result<Self::Value> {
        if name == self.var {
            Ok(RationalFunction::x(self.field))
        } else {
            Ok(RationalFunction::constant(FieldDomain(self.field).symbol(name)?))
        }
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a + b
    }
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a - b
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a * b
    }
    fn neg(&self, a: &Self::Value) -> Self::Value {
        -a
    }
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        a.try_div(b)
    }
}

/// Functions on `yⁿ = f(x)`; the symbols are `x`, `y` and the field generator.
pub struct FfDomain<'a> {
    pub n: usize,
    pub f: &'a crate::KPoly,
}

impl ExprDomain for FfDomain<'_> {
    type Value = FfElem;
    fn constant(&self, r: &Rational) -> FfElem {
        FfElem::constant(self.n, self.f, FieldElement::from_rational(self.f.ctx(), r.clone()))
    }
    fn symbol(&self, name: &str) -> Result<FfElem> {
        match name {
            "x" => Ok(FfElem::x(self.n, self.f)),
            "y" => Ok(FfElem::y(self.n, self.f)),
            _ => Ok(FfElem::constant(self.n, self.f, FieldDomain(self.f.ctx()).symbol(name)?)),
        }
    }
    fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.try_add(b).expect("operands share the curve")
    }
    fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.try_sub(b).expect("operands share the curve")
    }
    fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.try_mul(b).expect("operands share the curve")
    }
    fn neg(&self, a: &FfElem) -> FfElem {
        a.neg()
    }
    fn div(&self, a: &FfElem, b: &FfElem) -> Result<FfElem> {
        a.try_div(b)
    }
}

pub fn parse_field_element(field: &Field, s: &str) -> Result<FieldElement> {
    Expr::parse(s)?.eval(&FieldDomain(field))
}

pub fn parse_ratfun(field: &Field, var: &str, s: &str) -> Result<RationalFunction<FieldElement>> {
    Expr::parse(s)?.eval(&RatFunDomain { field, var })
}

/// Parses a function in `x`, `y` on the curve `yⁿ = f(x)`.
pub fn parse_ffelem(n: usize, f: &crate::KPoly, s: &str) -> Result<FfElem> {
    Expr::parse(s)?.eval(&FfDomain { n, f })
}

/// Parses a polynomial in `var`; fails if the expression has a nontrivial denominator.
pub fn parse_poly(field: &Field, var: &str, s: &str) -> Result<crate::KPoly> {
    let r = parse_ratfun(field, var, s)?;
    if !r.den().is_one() {
        return Err(Error::InvalidInput(format!("{s:?} is not a polynomial in {var}")));
    }
    Ok(r.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, NumberField};

    #[test]
    fn precedence_and_implicit_multiplication() {
        let q = NumberField::rationals();
        let p = parse_ratfun(&q, "x", "(x^3+1)^2/(4x^3)").unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.den().deg0(), 3);
        assert_eq!(parse_field_element(&q, "-2^2").unwrap().as_rational(), Some(int(-4)));
        assert_eq!(parse_field_element(&q, "3/4 - 1/4").unwrap().as_rational(), Some(rat(1, 2)));
        assert_eq!(parse_field_element(&q, "2^(-2)").unwrap().as_rational(), Some(rat(1, 4)));
        let r = parse_ratfun(&q, "x", "2x(x-1)").unwrap();
        assert_eq!(r.num().coeffs().len(), 3);
    }

    #[test]
    fn generator_symbol() {
        let k = NumberField::new(vec![int(1), int(1), int(1)], "w").unwrap();
        let w = parse_field_element(&k, "w").unwrap();
        assert!((&(&w * &w) + &w).coords().iter().all(|c| *c == int(-1) || *c == int(0)));
        assert_eq!(parse_field_element(&k, "w^3").unwrap(), FieldElement::one(&k));
        assert!(parse_field_element(&k, "v").is_err());
        let p = parse_poly(&k, "x", "x^2 + w x - 1").unwrap();
        assert_eq!(p.coeff(1), w);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match Expr::parse("x + (1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        assert!(Expr::parse("x $ 1").is_err());
        assert!(Expr::parse("x^y").is_err());
        assert!(parse_poly(&NumberField::rationals(), "x", "1/x").is_err());
    }

    #[test]
    fn function_field_expressions() {
        let q = NumberField::rationals();
        let f = parse_poly(&q, "x", "x^3+1").unwrap();
        let h = parse_ffelem(2, &f, "(1+y)/2").unwrap();
        assert_eq!(h.comp(1), &parse_ratfun(&q, "x", "1/2").unwrap());
        let y2 = parse_ffelem(2, &f, "y^2 - 1").unwrap();
        assert!(y2.is_x_only());
        assert_eq!(y2.comp(0), &parse_ratfun(&q, "x", "x^3").unwrap());
        let inv = parse_ffelem(2, &f, "1/y").unwrap();
        assert_eq!(inv.comp(1), &parse_ratfun(&q, "x", "1/(x^3+1)").unwrap());
    }

    #[test]
    fn unicode_operators() {
        let q = NumberField::rationals();
        assert_eq!(parse_field_element(&q, "3·2 − 1").unwrap().as_rational(), Some(int(5)));
        assert_eq!(Expr::parse("a*b + a").unwrap().symbols(), vec!["a".to_string(), "b".to_string()]);
    }
}
