use super::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_ctx<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<()> {
    if f.ctx() == g.ctx() {
        Ok(())
    } else {
        Err(Error::FieldMismatch("polynomials over different fields".into()))
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
    let (mut a, mut b) = (f.monic(), g.monic());
    while !b.is_zero() {
        let r = a.rem(&b).expect("nonzero divisor");
        a = b;
        b = r.monic();
    }
    a
}

/// Monic gcd with input validation.
pub fn poly_gcd<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    check_ctx(f, g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
    }
    Ok(gcd(f, g))
}

/// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g` and `g` monic (or zero).
pub fn xgcd<K: Scalar>(a: &Polynomial<K>, b: &Polynomial<K>) -> (Polynomial<K>, Polynomial<K>, Polynomial<K>) {
    let ctx = a.ctx().clone();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Polynomial::one(&ctx), Polynomial::zero(&ctx));
    let (mut t0, mut t1) = (Polynomial::zero(&ctx), Polynomial::one(&ctx));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.lc().and_then(|c| c.inv_elem()) {
        Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
        None => (r0, s0, t0),
    }
}

/// `f = constant · Π parts[i].0 ^ parts[i].1` with monic, squarefree, pairwise coprime parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SquarefreeDecomposition<K: Scalar> {
    pub constant: K,
    pub parts: Vec<(Polynomial<K>, usize)>,
}

impl<K: Scalar> SquarefreeDecomposition<K> {
    pub fn reconstruct(&self) -> Polynomial<K> {
        self.parts
            .iter()
            .fold(Polynomial::constant(self.constant.clone()), |acc, (p, e)| &acc * &p.pow(*e as u32))
    }
}

/// Yun's squarefree decomposition (characteristic zero).
pub fn squarefree_decompose<K: Scalar>(f: &Polynomial<K>) -> Result<SquarefreeDecomposition<K>> {
    let lc = f
        .lc()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("squarefree decomposition of zero".into()))?;
    let f = f.monic();
    let mut parts = Vec::new();
    if f.deg0() == 0 {
        return Ok(SquarefreeDecomposition { constant: lc, parts });
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df);
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = gcd(&b, &d);
        if a.deg0() > 0 {
            parts.push((a.clone(), i));
        }
        b = b.exact_div(&a)?;
        if b.deg0() == 0 {
            break;
        }
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { constant: lc, parts })
}

/// Monic radical of `f`.
pub fn squarefree_part<K: Scalar>(f: &Polynomial<K>) -> Polynomial<K> {
    if f.deg0() == 0 {
        return Polynomial::one(f.ctx());
    }
    f.exact_div(&gcd(f, &f.derivative())).expect("gcd divides").monic()
}

/// Splits the squarefree `p` by root multiplicity in `f`: pieces `(q, k)` whose
/// roots are exactly the roots of `p` of multiplicity `k` in `f` (`k = 0` included).
pub fn split_by_valuation<K: Scalar>(p: &Polynomial<K>, f: &Polynomial<K>) -> Vec<(Polynomial<K>, usize)> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    let mut fk = f.clone();
    let mut k = 0;
    loop {
        let g = gcd(&rest, &fk);
        let exact = rest.exact_div(&g).expect("gcd divides");
        if exact.deg0() > 0 {
            out.push((exact, k));
        }
        if g.deg0() == 0 {
            return out;
        }
        fk = fk.exact_div(&g).expect("gcd divides");
        rest = g;
        k += 1;
    }
}

/// Pairwise coprime monic squarefree polynomials with the same roots as the inputs together.
pub fn coprime_basis<K: Scalar>(polys: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
    let mut basis: Vec<Polynomial<K>> = Vec::new();
    for p in polys {
        if p.is_zero() || p.deg0() == 0 {
            continue;
        }
        let mut q = squarefree_part(p);
        let mut next = Vec::with_capacity(basis.len() + 1);
        for b in basis {
            if q.deg0() == 0 {
                next.push(b);
                continue;
            }
            let g = gcd(&b, &q);
            if g.deg0() == 0 {
                next.push(b);
                continue;
            }
            let rest = b.exact_div(&g).expect("gcd divides");
            q = q.exact_div(&g).expect("gcd divides");
            if rest.deg0() > 0 {
                next.push(rest);
            }
            next.push(g);
        }
        if q.deg0() > 0 {
            next.push(q.monic());
        }
        basis = next;
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(&(), cs)
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &q(&[-1, 1]) * &q(&[1, 0, 1]);
        let b = &q(&[-1, 1]) * &q(&[2, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), q(&[-1, 1]));
        assert!(poly_gcd(&QPoly::zero(&()), &QPoly::zero(&())).is_err());
        let (g, s, t) = xgcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn yun_multiplicities() {
        let f = &(&q(&[-1, 1]).pow(3) * &q(&[1, 1]).pow(2)) * &q(&[2, 0, 1]);
        let f = f.scale(&crate::exactnum::int(5));
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d.parts, vec![(q(&[2, 0, 1]), 1), (q(&[1, 1]), 2), (q(&[-1, 1]), 3)]);
        assert_eq!(d.reconstruct(), f);
        assert_eq!(squarefree_part(&f).deg0(), 4);
    }

    #[test]
    fn valuation_pieces() {
        let p = &(&q(&[-1, 1]) * &q(&[1, 1])) * &q(&[0, 1]);
        let f = &q(&[-1, 1]).pow(3) * &q(&[0, 1]);
        let mut parts = split_by_valuation(&p, &f);
        parts.sort_by_key(|x| x.1);
        assert_eq!(parts, vec![(q(&[1, 1]), 0), (q(&[0, 1]), 1), (q(&[-1, 1]), 3)]);
    }

    #[test]
    fn coprime_pieces() {
        let a = &q(&[-1, 1]).pow(2) * &q(&[1, 1]);
        let b = &q(&[1, 1]) * &q(&[0, 1]);
        let basis = coprime_basis(&[a, b]);
        assert_eq!(basis.len(), 3);
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                assert_eq!(gcd(x, y).deg0(), 0);
            }
        }
    }

    proptest! {
        #[test]
        fn bezout_identity(a in prop::collection::vec(-9i64..9, 1..6), b in prop::collection::vec(-9i64..9, 1..6)) {
            let (a, b) = (q(&a), q(&b));
            prop_assume!(!a.is_zero() || !b.is_zero());
            let (g, s, t) = xgcd(&a, &b);
            prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
            prop_assert!(g.divides(&a) && g.divides(&b));
        }

        #[test]
        fn squarefree_reconstructs(roots in prop::collection::vec((-4i64..4, 1usize..4), 1..4), c in 1i64..5) {
            let mut f = QPoly::from_ints(&(), &[c]);
            for (r, e) in &roots {
                f = &f * &q(&[-r, 1]).pow(*e as u32);
            }
            let d = squarefree_decompose(&f).unwrap();
            prop_assert_eq!(d.reconstruct(), f);
            for (p, _) in &d.parts {
                prop_assert_eq!(squarefree_part(p), p.clone());
            }
        }
    }
}
