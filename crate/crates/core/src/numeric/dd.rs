//! Double-double arithmetic: an unevaluated sum of two `f64`s, ~106 bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Num, One, ToPrimitive, Zero};

use super::Real;
use crate::exactnum::Rational;

#[derive(Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const fn new(hi: f64, lo: f64) -> Self {
        DoubleDouble { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn from_pair(a: f64, b: f64) -> Self {
        let (hi, lo) = quick_two_sum(a, b);
        DoubleDouble { hi, lo }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::from_pair(p, e + self.lo * b)
    }

    pub fn trunc(self) -> Self {
        let hi = self.hi.trunc();
        if hi != self.hi {
            return DoubleDouble { hi, lo: 0.0 };
        }
        Self::from_pair(hi, self.lo.trunc())
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hi + self.lo)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::from_pair(s, e + f)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        Self::from_pair(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        Self::from_pair(q1, q2) + DoubleDouble { hi: q3, lo: 0.0 }
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - b * (self / b).trunc()
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble { hi: 1.0, lo: 0.0 }
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = std::num::ParseFloatError;

    fn from_str_radix(s: &str, _radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Ok(DoubleDouble { hi: s.parse()?, lo: 0.0 })
    }
}

impl Real for DoubleDouble {
    const MANTISSA_BITS: u32 = 106;

    fn from_f64(v: f64) -> Self {
        DoubleDouble { hi: v, lo: 0.0 }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn from_rational(r: &Rational) -> Self {
        let hi = r.to_f64().unwrap_or(f64::NAN);
        if !hi.is_finite() {
            return DoubleDouble { hi, lo: 0.0 };
        }
        let exact_hi = Rational::from_float(hi).expect("finite float");
        let lo = (r - exact_hi).to_f64().unwrap_or(0.0);
        Self::from_pair(hi, lo)
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::zero();
        }
        let q = self.hi.sqrt();
        let (p, e) = two_prod(q, q);
        let r = (self - DoubleDouble { hi: p, lo: e }).to_f64();
        Self::from_pair(q, r / (2.0 * q))
    }

    fn epsilon() -> Self {
        DoubleDouble { hi: 2f64.powi(-104), lo: 0.0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn dd(r: &Rational) -> DoubleDouble {
        DoubleDouble::from_rational(r)
    }

    fn err(x: DoubleDouble, r: &Rational) -> f64 {
        (x - dd(r)).to_f64().abs()
    }

    #[test]
    fn one_third_is_accurate() {
        let third = dd(&rat(1, 3));
        let back = third * DoubleDouble::from_f64(3.0);
        assert!((back - DoubleDouble::one()).to_f64().abs() < 1e-31);
        assert!(err(DoubleDouble::one() / DoubleDouble::from_f64(3.0), &rat(1, 3)) < 1e-32);
    }

    #[test]
    fn sqrt_two() {
        let s = DoubleDouble::from_f64(2.0).sqrt();
        assert!((s * s - DoubleDouble::from_f64(2.0)).to_f64().abs() < 1e-31);
        assert!((s.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-16);
    }

    #[test]
    fn rational_round_trip_beats_f64() {
        let r = rat(123456789, 987654321);
        let x = dd(&r);
        let exact = Rational::from_float(x.hi()).unwrap() + Rational::from_float(x.lo()).unwrap();
        let diff = (exact - &r).to_f64().unwrap().abs();
        assert!(diff < 1e-30, "{diff}");
    }

    #[test]
    fn ordering_and_rem() {
        let a = DoubleDouble::new(1.0, 1e-20);
        let b = DoubleDouble::new(1.0, -1e-20);
        assert!(b < a);
        let r = DoubleDouble::from_f64(7.5) % DoubleDouble::from_f64(2.0);
        assert_eq!(r.to_f64(), 1.5);
    }
}
