use super::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn pow_elem<K: Scalar>(a: &K, k: usize) -> K {
    let mut acc = K::one_in(&a.context());
    for _ in 0..k {
        acc = acc * a.clone();
    }
    acc
}

fn sign<K: Scalar>(x: K, odd: bool) -> K {
    if odd {
        -x
    } else {
        x
    }
}

fn res_rec<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> K {
    let ctx = f.ctx();
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return K::zero_in(ctx);
    };
    if n == 0 {
        return pow_elem(&g.coeff(0), m);
    }
    if m == 0 {
        return pow_elem(&f.coeff(0), n);
    }
    if m < n {
        return sign(res_rec(g, f), m * n % 2 == 1);
    }
    let r = f.rem(g).expect("nonzero divisor");
    let Some(p) = r.degree() else {
        return K::zero_in(ctx);
    };
    let lc = g.lc().expect("nonzero").clone();
    sign(pow_elem(&lc, m - p) * res_rec(g, &r), m * n % 2 == 1)
}

/// Resultant of two nonzero polynomials, by the Euclidean remainder sequence.
pub fn resultant<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<K> {
    if f.ctx() != g.ctx() {
        return Err(Error::FieldMismatch("polynomials over different fields".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("resultant with the zero polynomial".into()));
    }
    Ok(res_rec(f, g))
}

/// `(−1)^{d(d−1)/2} · res(f, f′) / lc(f)` for `deg f = d ≥ 1`.
pub fn discriminant<K: Scalar>(f: &Polynomial<K>) -> Result<K> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::InvalidInput("discriminant of a constant polynomial".into())),
    };
    if d == 1 {
        return Ok(K::one_in(f.ctx()));
    }
    let r = resultant(f, &f.derivative())?;
    let inv = f.lc().and_then(|c| c.inv_elem()).expect("nonzero leading coefficient");
    Ok(sign(r * inv, (d * (d - 1) / 2) % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};
    use crate::QPoly;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(&(), cs)
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&q(&[-2, 1]), &q(&[1, 0, 1])).unwrap(), int(5));
        assert_eq!(resultant(&q(&[1, 0, 1]), &q(&[-2, 1])).unwrap(), int(5));
        assert_eq!(resultant(&q(&[-1, 1]), &q(&[-1, 0, 1])).unwrap(), int(0));
        assert!(resultant(&q(&[1]), &QPoly::zero(&())).is_err());
    }

    #[test]
    fn discriminants() {
        // b^2 - 4ac
        assert_eq!(discriminant(&q(&[3, 5, 2])).unwrap(), int(1));
        // -4a^3 - 27b^2 for x^3 + ax + b
        assert_eq!(discriminant(&q(&[1, -1, 0, 1])).unwrap(), int(-23));
        assert_eq!(discriminant(&q(&[15, 5, -1, 1])).unwrap(), int(-7840));
        assert!(discriminant(&q(&[4])).is_err());
    }

    proptest! {
        #[test]
        fn resultant_is_product_of_differences(a in prop::collection::vec(-5i64..5, 1..4), b in prop::collection::vec(-5i64..5, 1..4)) {
            let f = a.iter().fold(q(&[1]), |acc, r| &acc * &q(&[-r, 1]));
            let g = b.iter().fold(q(&[1]), |acc, r| &acc * &q(&[-r, 1]));
            let mut prod = Rational::from_integer(1.into());
            for x in &a {
                for y in &b {
                    prod *= int(x - y);
                }
            }
            prop_assert_eq!(resultant(&f, &g).unwrap(), prod);
        }
    }
}
