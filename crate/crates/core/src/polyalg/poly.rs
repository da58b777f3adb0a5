use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::scalar::Scalar;

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone)]
pub struct Polynomial<K: Scalar> {
    ctx: K::Context,
    coeffs: Vec<K>,
}

impl<K: Scalar> Polynomial<K> {
    pub fn new(ctx: K::Context, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Polynomial { ctx, coeffs }
    }

    pub fn zero(ctx: &K::Context) -> Self {
        Polynomial { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &K::Context) -> Self {
        Self::constant(K::one_in(ctx))
    }

    pub fn constant(c: K) -> Self {
        Self::new(c.context(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(ctx: &K::Context) -> Self {
        Self::monomial(K::one_in(ctx), 1)
    }

    pub fn monomial(c: K, k: usize) -> Self {
        let ctx = c.context();
        let mut coeffs = vec![K::zero_in(&ctx); k];
        coeffs.push(c);
        Self::new(ctx, coeffs)
    }

    pub fn from_rationals(ctx: &K::Context, cs: &[Rational]) -> Self {
        Self::new(ctx.clone(), cs.iter().map(|r| K::from_rational_in(ctx, r)).collect())
    }

    pub fn from_ints(ctx: &K::Context, cs: &[i64]) -> Self {
        Self::new(ctx.clone(), cs.iter().map(|&n| K::from_int_in(ctx, n)).collect())
    }

    pub fn ctx(&self) -> &K::Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| K::zero_in(&self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one_elem()
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero_in(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| K::from_int_in(&self.ctx, k as i64) * c.clone())
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.ctx.clone(), self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) if lc.is_one_elem() => self.clone(),
            Some(lc) => {
                let inv = lc.inv_elem().expect("nonzero leading coefficient is invertible");
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::DivisionByZero("polynomial division by zero".into()))?;
        let inv = d
            .lc()
            .and_then(|c| c.inv_elem())
            .ok_or_else(|| Error::DivisionByZero("leading coefficient not invertible".into()))?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![K::zero_in(&self.ctx); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * inv.clone();
            if !c.is_zero_elem() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dj.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(self.ctx.clone(), q), Self::new(self.ctx.clone(), r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidInput("polynomial division is not exact".into()))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut b = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `g` as a factor: the largest `k` with `g^k | self`.
    pub fn valuation(&self, g: &Self) -> usize {
        assert!(!self.is_zero(), "valuation of the zero polynomial");
        assert!(g.deg0() > 0, "valuation at a constant");
        let mut k = 0;
        let mut p = self.clone();
        loop {
            match p.div_rem(g) {
                Ok((q, r)) if r.is_zero() => {
                    p = q;
                    k += 1;
                }
                _ => return k,
            }
        }
    }

    /// `x^n · self(1/x)`; requires `n ≥ deg`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(n >= self.deg0());
        let mut c = self.coeffs.clone();
        c.resize(n + 1, K::zero_in(&self.ctx));
        c.reverse();
        Self::new(self.ctx.clone(), c)
    }

    pub fn map<L: Scalar>(&self, ctx: &L::Context, f: impl Fn(&K) -> L) -> Polynomial<L> {
        Polynomial::new(ctx.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<L: Scalar>(&self, ctx: &L::Context, f: impl Fn(&K) -> Result<L>) -> Result<Polynomial<L>> {
        Ok(Polynomial::new(ctx.clone(), self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }
}

impl<K: Scalar> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Scalar> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

fn needs_parens(s: &str) -> bool {
    s.trim_start_matches('-').contains(['+', '-', ' '])
}

impl<K: Scalar + fmt::Display> Polynomial<K> {
    /// Human-readable form in descending powers of `var`.
    pub fn to_string_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_elem() {
                continue;
            }
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !needs_parens(&cs) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let body = if needs_parens(&body) { format!("({body})") } else { body };
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = match (k, body.as_str()) {
                (0, _) => body.clone(),
                (_, "1") => mono,
                _ => format!("{body}*{mono}"),
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
        out
    }
}

impl<K: Scalar + fmt::Display> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<K: Scalar> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::new(self.ctx.clone(), coeffs)
    }
}

impl<K: Scalar> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<K: Scalar> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        self + &(-rhs)
    }
}

impl<K: Scalar> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut out = vec![K::zero_in(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero_elem() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Polynomial::new(self.ctx.clone(), out)
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<K: Scalar> $trait for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: Polynomial<K>) -> Polynomial<K> {
                (&self).$method(&rhs)
            }
        }
        impl<K: Scalar> $trait<&Polynomial<K>> for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: &Polynomial<K>) -> Polynomial<K> {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<K: Scalar> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, NumberField};
    use crate::{FieldElement, QPoly};

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(&(), cs)
    }

    #[test]
    fn arithmetic_and_division() {
        let f = q(&[-1, 0, 0, 1]);
        let g = q(&[-1, 1]);
        let (qq, r) = f.div_rem(&g).unwrap();
        assert_eq!(qq, q(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(&qq * &g, f);
        assert_eq!(f.derivative(), q(&[0, 0, 3]));
        assert_eq!(f.eval(&int(2)), int(7));
        assert!(f.div_rem(&QPoly::zero(&())).is_err());
    }

    #[test]
    fn compose_and_valuation() {
        let f = q(&[1, 0, 1]);
        let g = q(&[1, 1]);
        assert_eq!(f.compose(&g), q(&[2, 2, 1]));
        let p = &g.pow(3) * &f;
        assert_eq!(p.valuation(&g), 3);
        assert_eq!(p.valuation(&f), 1);
        assert_eq!(q(&[1, 2, 3]).reversed(3), q(&[0, 3, 2, 1]));
    }

    #[test]
    fn display_over_a_field() {
        let k = NumberField::new(vec![int(1), int(0), int(1)], "i").unwrap();
        let i = k.generator();
        let one = FieldElement::one(&k);
        let p = Polynomial::new(k.clone(), vec![&one + &i, -one.clone(), one]);
        assert_eq!(p.to_string(), "x^2 - x + (i + 1)");
        assert_eq!(q(&[0, -2, 1]).to_string(), "x^2 - 2*x");
    }
}
