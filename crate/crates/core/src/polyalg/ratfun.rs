use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::{gcd, squarefree_decompose};
use super::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `num/den` in lowest terms with `den` monic.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<K: Scalar> {
    num: Polynomial<K>,
    den: Polynomial<K>,
}

impl<K: Scalar> RationalFunction<K> {
    pub fn new(num: Polynomial<K>, den: Polynomial<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero(num.ctx()));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.deg0() > 0 {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        } else {
            (num, den)
        };
        let dl = den.lc().expect("nonzero").clone();
        let scale = dl.inv_elem().expect("nonzero");
        Ok(RationalFunction { num: num.scale(&scale), den: den.scale(&scale) })
    }

    /// Skips the gcd; the caller guarantees `num` and `den` are coprime.
    pub(crate) fn from_coprime(num: Polynomial<K>, den: Polynomial<K>) -> Result<Self> {
        let scale = den
            .lc()
            .and_then(|c| c.inv_elem())
            .ok_or_else(|| Error::DivisionByZero("rational function with zero denominator".into()))?;
        if num.is_zero() {
            return Ok(Self::zero(num.ctx()));
        }
        Ok(RationalFunction { num: num.scale(&scale), den: den.scale(&scale) })
    }

    pub fn from_poly(p: Polynomial<K>) -> Self {
        let den = Polynomial::one(p.ctx());
        RationalFunction { num: p, den }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero(ctx: &K::Context) -> Self {
        Self::from_poly(Polynomial::zero(ctx))
    }

    pub fn one(ctx: &K::Context) -> Self {
        Self::from_poly(Polynomial::one(ctx))
    }

    pub fn x(ctx: &K::Context) -> Self {
        Self::from_poly(Polynomial::x(ctx))
    }

    pub fn ctx(&self) -> &K::Context {
        self.num.ctx()
    }

    pub fn num(&self) -> &Polynomial<K> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<K> {
        &self.den
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Value at a finite point; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        d.inv_elem().map(|inv| self.num.eval(x) * inv)
    }

    /// Value at `x = ∞`; `None` when ∞ is a pole.
    pub fn eval_at_infinity(&self) -> Option<K> {
        let (n, d) = (self.num.deg0(), self.den.deg0());
        match n.cmp(&d) {
            std::cmp::Ordering::Less => Some(K::zero_in(self.ctx())),
            std::cmp::Ordering::Equal => {
                Some(self.num.lc().cloned().unwrap_or_else(|| K::zero_in(self.ctx())))
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero_elem() {
            return Self::zero(self.ctx());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, self.den.pow(2)).expect("nonzero denominator")
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        ratfun_compose(self, inner)
    }

    pub fn map<L: Scalar>(&self, ctx: &L::Context, f: impl Fn(&K) -> L) -> Result<RationalFunction<L>> {
        RationalFunction::new(self.num.map(ctx, &f), self.den.map(ctx, &f))
    }
}

/// Homogenised substitution: `Σ c_i p^i q^{d-i}`.
fn homogenize<K: Scalar>(f: &Polynomial<K>, p: &Polynomial<K>, q: &Polynomial<K>, d: usize) -> Polynomial<K> {
    let ctx = p.ctx();
    let mut p_pows = vec![Polynomial::one(ctx)];
    let mut q_pows = vec![Polynomial::one(ctx)];
    for i in 1..=d {
        p_pows.push(&p_pows[i - 1] * p);
        q_pows.push(&q_pows[i - 1] * q);
    }
    let mut acc = Polynomial::zero(ctx);
    for (i, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero_elem() {
            acc = &acc + &(&p_pows[i] * &q_pows[d - i]).scale(c);
        }
    }
    acc
}

/// Reduced canonical `outer ∘ inner`.
pub fn ratfun_compose<K: Scalar>(outer: &RationalFunction<K>, inner: &RationalFunction<K>) -> Result<RationalFunction<K>> {
    let d = outer.degree();
    let num = homogenize(&outer.num, &inner.num, &inner.den, d);
    let den = homogenize(&outer.den, &inner.num, &inner.den, d);
    if den.is_zero() {
        return Err(Error::DegenerateComposition(
            "outer function has a pole at the constant inner value".into(),
        ));
    }
    RationalFunction::new(num, den)
}

/// Exact `k`-th root of a polynomial all of whose multiplicities are divisible by `k`.
fn poly_root_part<K: Scalar>(p: &Polynomial<K>, k: usize) -> Option<(K, Polynomial<K>)> {
    let d = squarefree_decompose(p).ok()?;
    let mut s = Polynomial::one(p.ctx());
    for (g, e) in &d.parts {
        if e % k != 0 {
            return None;
        }
        s = &s * &g.pow((e / k) as u32);
    }
    Some((d.constant, s))
}

/// If every multiplicity in `num` and `den` is divisible by `n`, returns `(c, S)` with `r = c·Sⁿ`.
pub fn is_constant_times_power<K: Scalar>(r: &RationalFunction<K>, n: usize) -> Option<(K, RationalFunction<K>)> {
    if r.is_zero() || n == 0 {
        return None;
    }
    let (c, sn) = poly_root_part(&r.num, n)?;
    let (_, sd) = poly_root_part(&r.den, n)?;
    Some((c, RationalFunction::new(sn, sd).ok()?))
}

pub fn is_constant_times_square<K: Scalar>(r: &RationalFunction<K>) -> Option<(K, RationalFunction<K>)> {
    is_constant_times_power(r, 2)
}

impl<K: Scalar> fmt::Debug for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<K: Scalar + fmt::Display> RationalFunction<K> {
    pub fn to_string_in(&self, var: &str) -> String {
        let n = self.num.to_string_in(var);
        if self.den.is_one() {
            return n;
        }
        format!("({n})/({})", self.den.to_string_in(var))
    }
}

impl<K: Scalar + fmt::Display> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<K: Scalar> Add for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn add(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<K: Scalar> Sub for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn sub(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        self + &(-rhs)
    }
}

impl<K: Scalar> Neg for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn neg(self) -> RationalFunction<K> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<K: Scalar> Mul for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn mul(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.ctx());
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1).expect("gcd divides") * &rhs.num.exact_div(&g2).expect("gcd divides");
        let den = &self.den.exact_div(&g2).expect("gcd divides") * &rhs.den.exact_div(&g1).expect("gcd divides");
        RationalFunction::from_coprime(num, den).expect("nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::{QPoly, QRatFun};
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(&(), cs)
    }

    fn rf(n: &[i64], d: &[i64]) -> QRatFun {
        QRatFun::new(q(n), q(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = rf(&[-2, 0, 2], &[-2, 2]);
        assert_eq!(r.num(), &q(&[1, 1]));
        assert!(r.den().is_one());
        assert!(QRatFun::new(q(&[1]), QPoly::zero(&())).is_err());
    }

    #[test]
    fn square_of_joukowski_map() {
        let z2 = rf(&[0, 0, 1], &[1]);
        let u = rf(&[1, 0, 1], &[0, 2]);
        let psi = z2.compose(&u).unwrap();
        assert_eq!(psi, rf(&[1, 0, 2, 0, 1], &[0, 0, 4]));
        assert_eq!(psi.degree(), 4);
        assert_eq!(QRatFun::x(&()).compose(&u).unwrap(), u);
    }

    #[test]
    fn constant_times_square() {
        let r = rf(&[1, 0, -2, 0, 1], &[0, 0, 0, 0, 4]);
        let (c, s) = is_constant_times_square(&r).unwrap();
        assert_eq!(c, rat(1, 4));
        assert_eq!(s, rf(&[-1, 0, 1], &[0, 0, 1]));
        let r8 = rf(&[1, 0, -2, 0, 1], &[0, 0, 0, 0, 8]);
        assert_eq!(is_constant_times_square(&r8).unwrap().0, rat(1, 8));
        assert!(is_constant_times_square(&rf(&[0, 0, 0, 1], &[-1, 1])).is_none());
    }

    #[test]
    fn degenerate_composition() {
        let outer = rf(&[1], &[-1, 1]);
        assert!(matches!(outer.compose(&QRatFun::constant(int(1))), Err(Error::DegenerateComposition(_))));
        assert_eq!(outer.compose(&QRatFun::constant(int(3))).unwrap(), QRatFun::constant(rat(1, 2)));
    }

    proptest! {
        #[test]
        fn composition_degree_multiplies(
            a in prop::collection::vec(-5i64..5, 2..4), b in prop::collection::vec(-5i64..5, 1..3),
            c in prop::collection::vec(-5i64..5, 2..4), d in prop::collection::vec(-5i64..5, 1..3),
        ) {
            prop_assume!(!q(&b).is_zero() && !q(&d).is_zero());
            let outer = QRatFun::new(q(&a), q(&b)).unwrap();
            let inner = QRatFun::new(q(&c), q(&d)).unwrap();
            prop_assume!(!inner.is_constant());
            let comp = outer.compose(&inner).unwrap();
            prop_assert_eq!(comp.degree(), outer.degree() * inner.degree());
            let x = int(7);
            if let Some(iv) = inner.eval(&x) {
                if let (Some(ov), Some(cv)) = (outer.eval(&iv), comp.eval(&x)) {
                    prop_assert_eq!(ov, cv);
                }
            }
        }
    }
}
