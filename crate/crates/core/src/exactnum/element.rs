use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Field, NumberField, Rational};
use crate::error::{Error, Result};
use crate::polyalg::{xgcd, Polynomial};
use crate::scalar::Scalar;

/// An element of a number field in the power basis 1, α, …, α^{d−1}.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coords: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn elem_arith(op: ArithOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

fn reduce(field: &NumberField, mut c: Vec<Rational>) -> Vec<Rational> {
    let d = field.degree();
    let m = field.minpoly();
    while c.len() > d {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = c.len() - d;
        for (j, mj) in m[..d].iter().enumerate() {
            if !mj.is_zero() {
                c[shift + j] -= &top * mj;
            }
        }
    }
    c.resize(d, Rational::zero());
    c
}

impl FieldElement {
    /// Coordinates beyond the field degree are reduced modulo the minimal polynomial.
    pub fn new(field: &Field, coords: Vec<Rational>) -> Self {
        FieldElement { field: field.clone(), coords: reduce(field, coords) }
    }

    pub(crate) fn from_coords_unchecked(field: &Field, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), field.degree());
        FieldElement { field: field.clone(), coords }
    }

    pub fn from_rational(field: &Field, r: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = r;
        FieldElement { field: field.clone(), coords }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(n.into()))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.field.is_rational() {
            let c = &self.coords[0];
            return Some(c.clone());
        }
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)))
        }
    }

    /// Re-expresses a rational element in a larger field.
    pub fn lift_into(&self, field: &Field) -> Result<Self> {
        if self.field == *field {
            return Ok(FieldElement { field: field.clone(), coords: self.coords.clone() });
        }
        match self.as_rational() {
            Some(r) if self.field.is_rational() => Ok(Self::from_rational(field, r)),
            _ => Err(Error::FieldMismatch(format!(
                "cannot move an element of {} into {}",
                self.field, field
            ))),
        }
    }

    pub fn try_add(&self, b: &Self) -> Result<Self> {
        self.check_field(b)?;
        let coords = self.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn try_sub(&self, b: &Self) -> Result<Self> {
        self.check_field(b)?;
        let coords = self.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn try_mul(&self, b: &Self) -> Result<Self> {
        self.check_field(b)?;
        let d = self.field.degree();
        if d == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &b.coords[0]],
            });
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(FieldElement { field: self.field.clone(), coords: reduce(&self.field, prod) })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero field element".into()));
        }
        if self.field.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coords[0].recip()));
        }
        let a = Polynomial::new((), self.coords.clone());
        let m = Polynomial::new((), self.field.minpoly().to_vec());
        let (g, s, _) = xgcd(&a, &m);
        if g.degree() != Some(0) {
            return Err(Error::DivisionByZero(
                "zero divisor encountered: field file invalid (reducible minimal polynomial)".into(),
            ));
        }
        let scale = g.coeff(0).recip();
        let coords = s.coeffs().iter().map(|c| c * &scale).collect();
        Ok(FieldElement::new(&self.field, coords))
    }

    pub fn try_div(&self, b: &Self) -> Result<Self> {
        self.check_field(b)?;
        self.try_mul(&b.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
            && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_rational() {
            return write!(f, "{}", self.coords[0]);
        }
        let g = self.field.generator_name();
        let mut out = String::new();
        for (k, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c } else { c.clone() };
            let mono = match k {
                0 => String::new(),
                1 => g.to_string(),
                _ => format!("{g}^{k}"),
            };
            let term = match k {
                0 => a.to_string(),
                _ if a.is_one() => mono,
                _ => format!("{a}*{mono}"),
            };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Scalar for FieldElement {
    type Context = Field;

    fn context(&self) -> Field {
        self.field.clone()
    }
    fn zero_in(ctx: &Field) -> Self {
        Self::zero(ctx)
    }
    fn one_in(ctx: &Field) -> Self {
        Self::one(ctx)
    }
    fn from_rational_in(ctx: &Field, r: &Rational) -> Self {
        Self::from_rational(ctx, r.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn is_one_elem(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }
    fn inv_elem(&self) -> Option<Self> {
        self.inverse().ok()
    }
}
