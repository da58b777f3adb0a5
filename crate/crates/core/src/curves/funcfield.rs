use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElement};
use crate::polyalg::{gcd, squarefree_part, Polynomial, RationalFunction};
use crate::{KPoly, KRatFun};

/// An element `Σ_{i<n} yⁱ·rᵢ(x)` of the function field of `yⁿ = g(x)`.
#[derive(Clone, PartialEq)]
pub struct FfElem {
    n: usize,
    g: KPoly,
    comps: Vec<KRatFun>,
}

impl FfElem {
    pub fn new(n: usize, g: &KPoly, mut comps: Vec<KRatFun>) -> Self {
        assert!(n >= 1 && comps.len() <= n, "too many components");
        comps.resize(n, RationalFunction::zero(g.ctx()));
        FfElem { n, g: g.clone(), comps }
    }

    pub fn from_ratfun(n: usize, g: &KPoly, r: KRatFun) -> Self {
        Self::new(n, g, vec![r])
    }

    pub fn constant(n: usize, g: &KPoly, c: FieldElement) -> Self {
        Self::from_ratfun(n, g, RationalFunction::constant(c))
    }

    pub fn x(n: usize, g: &KPoly) -> Self {
        Self::from_ratfun(n, g, RationalFunction::x(g.ctx()))
    }

    pub fn y(n: usize, g: &KPoly) -> Self {
        let mut comps = vec![RationalFunction::zero(g.ctx()); n];
        if n == 1 {
            comps[0] = RationalFunction::from_poly(g.clone());
        } else {
            comps[1] = RationalFunction::one(g.ctx());
        }
        FfElem { n, g: g.clone(), comps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn curve_poly(&self) -> &KPoly {
        &self.g
    }

    pub fn field(&self) -> &Field {
        self.g.ctx()
    }

    pub fn comps(&self) -> &[KRatFun] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &KRatFun {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// True when no `y` appears.
    pub fn is_x_only(&self) -> bool {
        self.comps[1..].iter().all(|c| c.is_zero())
    }

    fn same_curve(&self, o: &Self) -> Result<()> {
        if self.n == o.n && self.g == o.g {
            Ok(())
        } else {
            Err(Error::CurveMismatch("function-field elements on different curves".into()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_curve(o)?;
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect();
        Ok(FfElem { n: self.n, g: self.g.clone(), comps })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        FfElem { n: self.n, g: self.g.clone(), comps: self.comps.iter().map(|c| -c).collect() }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_curve(o)?;
        let (pa, da) = self.split_den();
        let (pb, db) = o.split_den();
        let ctx = self.g.ctx();
        let mut acc = vec![Polynomial::zero(ctx); self.n];
        for (i, a) in pa.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in pb.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut t = a * b;
                if i + j >= self.n {
                    t = &t * &self.g;
                }
                let k = (i + j) % self.n;
                acc[k] = &acc[k] + &t;
            }
        }
        let den = &da * &db;
        let comps = acc.into_iter().map(|q| RationalFunction::new(q, den.clone())).collect::<Result<_>>()?;
        Ok(FfElem { n: self.n, g: self.g.clone(), comps })
    }

    /// Polynomials `pᵢ` and a common denominator `D` with `rᵢ = pᵢ / D`.
    pub fn split_den(&self) -> (Vec<KPoly>, KPoly) {
        let mut den = Polynomial::one(self.g.ctx());
        for c in &self.comps {
            if !c.is_zero() && !c.den().is_constant() {
                let g = gcd(&den, c.den());
                den = &den * &c.den().exact_div(&g).expect("gcd divides");
            }
        }
        let nums = self
            .comps
            .iter()
            .map(|c| if c.is_zero() { c.num().clone() } else { c.num() * &den.exact_div(c.den()).expect("common denominator") })
            .collect();
        (nums, den)
    }

    /// Norm as `P / Dⁿ` with polynomial `P`, before cancellation.
    fn norm_parts(&self) -> Result<(KPoly, KPoly)> {
        let (p, d) = self.split_den();
        let g = &self.g;
        let num = match self.n {
            1 => p[0].clone(),
            2 => &(&p[0] * &p[0]) - &(&(&p[1] * &p[1]) * g),
            3 => {
                let three = FieldElement::from_int(self.field(), 3);
                let a3 = &(&p[0] * &p[0]) * &p[0];
                let b3 = &(&(&p[1] * &p[1]) * &p[1]) * g;
                let c3 = &(&(&(&p[2] * &p[2]) * &p[2]) * g) * g;
                let abc = (&(&(&p[0] * &p[1]) * &p[2]) * g).scale(&three);
                &(&(&a3 + &b3) + &c3) - &abc
            }
            n => return Err(Error::Unsupported(format!("norm for y^{n}"))),
        };
        Ok((num, d))
    }

    pub fn scale(&self, r: &KRatFun) -> Self {
        FfElem { n: self.n, g: self.g.clone(), comps: self.comps.iter().map(|c| c * r).collect() }
    }

    /// Norm to `K(x)`: the product of the `n` conjugates `y ↦ ζ^j y`.
    pub fn norm(&self) -> Result<KRatFun> {
        let (mut num, d) = self.norm_parts()?;
        if num.is_zero() {
            return Ok(RationalFunction::zero(self.field()));
        }
        let base = squarefree_part(&d);
        let mut den = d.pow(self.n as u32);
        loop {
            let g = gcd(&gcd(&num, &base), &den);
            if g.deg0() == 0 {
                break;
            }
            num = num.exact_div(&g)?;
            den = den.exact_div(&g)?;
        }
        RationalFunction::from_coprime(num, den)
    }

    /// `N / self` as an element: the product of the nontrivial conjugates.
    fn adjugate(&self) -> Result<Self> {
        let g = RationalFunction::from_poly(self.g.clone());
        let c = &self.comps;
        let comps = match self.n {
            1 => vec![RationalFunction::one(self.field())],
            2 => vec![c[0].clone(), -&c[1]],
            3 => vec![
                &(&c[0] * &c[0]) - &(&(&c[1] * &c[2]) * &g),
                &(&(&c[2] * &c[2]) * &g) - &(&c[0] * &c[1]),
                &(&c[1] * &c[1]) - &(&c[0] * &c[2]),
            ],
            n => return Err(Error::Unsupported(format!("inverse for y^{n}"))),
        };
        Ok(FfElem { n: self.n, g: self.g.clone(), comps })
    }

    /// `d/dx`, using `y' = y·f'/(n·f)`.
    pub fn derivative(&self) -> Result<Self> {
        let g = RationalFunction::from_poly(self.g.clone());
        let log_dy = RationalFunction::from_poly(self.g.derivative())
            .try_div(&g.scale(&FieldElement::from_int(self.field(), self.n as i64)))?;
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let i = FieldElement::from_int(self.field(), i as i64);
                &r.derivative() + &(r * &log_dy).scale(&i)
            })
            .collect();
        Ok(FfElem { n: self.n, g: self.g.clone(), comps })
    }

    pub fn inverse(&self) -> Result<Self> {
        let nm = self.norm()?;
        if nm.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero in the function field".into()));
        }
        Ok(self.adjugate()?.scale(&nm.inv()?))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inverse()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::constant(self.n, &self.g, FieldElement::one(self.field()));
        for _ in 0..k.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// `p(self)` for a polynomial `p`.
    pub fn eval_poly(&self, p: &KPoly) -> Result<Self> {
        let mut acc = Self::constant(self.n, &self.g, FieldElement::zero(self.field()));
        for c in p.coeffs().iter().rev() {
            acc = acc.try_mul(self)?.try_add(&Self::constant(self.n, &self.g, c.clone()))?;
        }
        Ok(acc)
    }

    pub fn eval_ratfun(&self, r: &KRatFun) -> Result<Self> {
        self.eval_poly(r.num())?.try_div(&self.eval_poly(r.den())?)
    }

    /// Substitutes `x ↦ xs`, `y ↦ ys` (elements of another function field).
    pub fn substitute(&self, xs: &FfElem, ys: &FfElem) -> Result<FfElem> {
        let mut acc = Self::constant(xs.n, &xs.g, FieldElement::zero(xs.field()));
        let mut ypow = Self::constant(xs.n, &xs.g, FieldElement::one(xs.field()));
        for (i, r) in self.comps.iter().enumerate() {
            if i > 0 {
                ypow = ypow.try_mul(ys)?;
            }
            if !r.is_zero() {
                acc = acc.try_add(&xs.eval_ratfun(r)?.try_mul(&ypow)?)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FfElem(n={}, {:?})", self.n, self.comps)
    }
}

impl fmt::Display for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            parts.push(match i {
                0 => cs,
                1 => format!("y*({cs})"),
                _ => format!("y^{i}*({cs})"),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
