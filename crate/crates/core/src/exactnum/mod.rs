//! Exact arithmetic over Q and over number fields Q[t]/(m(t)).

mod element;
mod embed;
mod field;

pub use element::{elem_arith, ArithOp, FieldElement};
pub use embed::{embed, Embedding};
pub use field::{field_create, Field, NumberField};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"n"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::DivisionByZero(format!("rational literal {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Formats as `"n"` or `"p/q"`.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact `k`-th root of a rational, if one exists.
pub fn rational_nth_root(r: &Rational, k: u32) -> Option<Rational> {
    if r.is_negative() && k % 2 == 0 {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.nth_root(k);
        (num_traits::pow(c.clone(), k as usize) == *n).then_some(c)
    };
    let sign = if r.is_negative() { -1 } else { 1 };
    let n = root(&r.numer().abs())?;
    let d = root(r.denom())?;
    Some(Rational::new(n * sign, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces() {
        let r = parse_rational(" 6/-4 ").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(parse_rational("0").unwrap(), int(0));
        assert_eq!(rational_to_string(&parse_rational("0/7").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_rational("1/0"), Err(Error::DivisionByZero(_))));
        assert!(matches!(parse_rational("x"), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&rat(1, 64), 2), Some(rat(1, 8)));
        assert_eq!(rational_nth_root(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(rational_nth_root(&rat(1, 8), 2), None);
        assert_eq!(rational_nth_root(&rat(-4, 1), 2), None);
    }
}
