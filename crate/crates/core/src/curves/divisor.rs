//! Exact divisors of functions on `yⁿ = f(x)` (`n ∈ {2, 3}`, `f` squarefree).

use super::FfElem;
use crate::belyi0::{BelyiValue, Passport};
use crate::error::{Error, Result};
use crate::exactnum::FieldElement;
use crate::polyalg::{coprime_basis, split_by_valuation, Polynomial, RationalFunction};
use crate::{KPoly, KRatFun};

/// `count` geometric points (over the algebraic closure) at which the function has order `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlaceOrder {
    pub order: i64,
    pub count: usize,
    pub at_infinity: bool,
}

fn ord(r: &KRatFun, p: &KPoly) -> i64 {
    if r.is_zero() {
        return i64::MAX;
    }
    r.num().valuation(p) as i64 - r.den().valuation(p) as i64
}

/// `r0² − r1·r2·f`, a third of the second symmetric function of the conjugates when `n = 3`.
fn pair_sum(comps: &[KRatFun], f: &KPoly) -> KRatFun {
    let g = RationalFunction::from_poly(f.clone());
    &(&comps[0] * &comps[0]) - &(&(&comps[1] * &comps[2]) * &g)
}

/// Orders of `Σ yⁱ rᵢ` at the places above the roots of `p`, a piece on which all
/// relevant valuations are constant.
fn piece_orders(n: usize, comps: &[KRatFun], f: &KPoly, norm: &KRatFun, p: &KPoly) -> Result<Vec<i64>> {
    let big = ord(norm, p);
    if p.divides(f) {
        return Ok(vec![big]);
    }
    let ms: Vec<i64> = comps.iter().filter(|c| !c.is_zero()).map(|c| ord(c, p)).collect();
    let m = *ms.iter().min().expect("nonzero element");
    let cnt = ms.iter().filter(|&&x| x == m).count();
    let orders = match (n, cnt) {
        (_, 1) => vec![m; n],
        (2, _) => vec![m, big - m],
        (3, _) => {
            // Sheet orders m ≤ o2 ≤ o3; the pairwise-product sum has order m + o2 unless o2 = o3.
            let rest = big - m;
            let o2 = ord(&pair_sum(comps, f), p).saturating_sub(m);
            if o2 < rest - o2 {
                vec![m, o2, rest - o2]
            } else if rest % 2 == 0 {
                vec![m, rest / 2, rest / 2]
            } else {
                return Err(Error::Unsupported(format!("inconsistent local orders at a root of {p}")));
            }
        }
        _ => return Err(Error::Unsupported(format!("divisors on y^{n}"))),
    };
    if orders.iter().sum::<i64>() != big {
        return Err(Error::Unsupported(format!("inconsistent local orders at a root of {p}")));
    }
    Ok(orders)
}

fn affine_divisor(n: usize, comps: &[KRatFun], f: &KPoly, norm: &KRatFun) -> Result<Vec<PlaceOrder>> {
    let mut factors = vec![f.clone(), norm.num().clone()];
    factors.extend(comps.iter().filter(|c| !c.is_zero()).map(|c| c.den().clone()));
    let mut pieces = coprime_basis(&factors);
    let mut refiners: Vec<&KPoly> = vec![f, norm.num(), norm.den()];
    for c in comps.iter().filter(|c| !c.is_zero()) {
        refiners.push(c.num());
        refiners.push(c.den());
    }
    let pairs = (n == 3).then(|| pair_sum(comps, f));
    if let Some(e) = &pairs {
        refiners.push(e.num());
    }
    for r in refiners {
        if r.is_zero() || r.is_constant() {
            continue;
        }
        pieces = pieces.iter().flat_map(|p| split_by_valuation(p, r).into_iter().map(|(q, _)| q)).collect();
    }
    let mut out = Vec::new();
    for p in pieces.iter().filter(|p| p.deg0() > 0) {
        for order in piece_orders(n, comps, f, norm, p)? {
            if order != 0 {
                out.push(PlaceOrder { order, count: p.deg0(), at_infinity: false });
            }
        }
    }
    Ok(out)
}

/// Orders at the points over `x = ∞`, via `x = 1/s`, `y = Y/s^k` on `Yⁿ = s^{nk} f(1/s)`.
fn infinity_divisor(h: &FfElem) -> Result<Vec<PlaceOrder>> {
    let n = h.n();
    let f = h.curve_poly();
    let k = f.deg0().div_ceil(n);
    let ft = f.reversed(n * k);
    let ctx = f.ctx();
    let s = Polynomial::x(ctx);
    let inv_s = RationalFunction::new(Polynomial::one(ctx), s.clone())?;
    let mut comps = Vec::with_capacity(n);
    for (i, r) in h.comps().iter().enumerate() {
        let shift = RationalFunction::new(Polynomial::one(ctx), s.pow((k * i) as u32))?;
        comps.push(&r.compose(&inv_s)? * &shift);
    }
    let local = FfElem::new(n, &ft, comps.clone());
    let norm = local.norm()?;
    Ok(piece_orders(n, &comps, &ft, &norm, &s)?
        .into_iter()
        .filter(|&o| o != 0)
        .map(|order| PlaceOrder { order, count: 1, at_infinity: true })
        .collect())
}

/// Zeros (positive) and poles (negative) of a nonzero function.
pub fn divisor(h: &FfElem) -> Result<Vec<PlaceOrder>> {
    if h.is_zero() {
        return Err(Error::InvalidInput("divisor of the zero function".into()));
    }
    if !matches!(h.n(), 2 | 3) {
        return Err(Error::Unsupported(format!("divisors on y^{}", h.n())));
    }
    let norm = h.norm()?;
    let mut out = affine_divisor(h.n(), h.comps(), h.curve_poly(), &norm)?;
    out.extend(infinity_divisor(h)?);
    out.sort();
    Ok(out)
}

fn expand(places: &[PlaceOrder], keep: impl Fn(i64) -> Option<usize>) -> Vec<usize> {
    let mut v: Vec<usize> = places
        .iter()
        .filter_map(|p| keep(p.order).map(|e| std::iter::repeat(e).take(p.count)))
        .flatten()
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Ramification indices of `h` over `0`, `1` or `∞`, sorted descending.
pub fn fiber_orders(h: &FfElem, v: BelyiValue) -> Result<Vec<usize>> {
    if h.is_x_only() && h.comp(0).is_constant() {
        return Err(Error::InvalidInput("constant function has no fibers".into()));
    }
    match v {
        BelyiValue::Zero => Ok(zeros(&divisor(h)?)),
        BelyiValue::Infinity => Ok(poles(&divisor(h)?)),
        BelyiValue::One => Ok(zeros(&divisor(&minus_one(h)?)?)),
    }
}

fn zeros(d: &[PlaceOrder]) -> Vec<usize> {
    expand(d, |o| (o > 0).then_some(o as usize))
}

fn poles(d: &[PlaceOrder]) -> Vec<usize> {
    expand(d, |o| (o < 0).then_some((-o) as usize))
}

fn minus_one(h: &FfElem) -> Result<FfElem> {
    h.try_sub(&FfElem::constant(h.n(), h.curve_poly(), FieldElement::one(h.field())))
}

/// Degree of `h` as a map to the projective line.
pub fn function_degree(h: &FfElem) -> Result<usize> {
    Ok(fiber_orders(h, BelyiValue::Infinity)?.iter().sum())
}

/// Passport of `h`, checking that the three fibers have equal degree.
pub fn genus1_passport(h: &FfElem) -> Result<Passport> {
    if h.is_x_only() && h.comp(0).is_constant() {
        return Err(Error::InvalidInput("constant function has no fibers".into()));
    }
    let d0 = divisor(h)?;
    let (inf, zero, one) = (poles(&d0), zeros(&d0), zeros(&divisor(&minus_one(h)?)?));
    let d: usize = inf.iter().sum();
    if zero.iter().sum::<usize>() != d || one.iter().sum::<usize>() != d {
        return Err(Error::Unsupported("fiber degrees disagree".into()));
    }
    Ok(Passport::new(inf, zero, one))
}
