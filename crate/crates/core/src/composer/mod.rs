//! Genus-1 Belyi maps built from genus-0 maps, superelliptic covers and isogenies.

mod psi;

pub use psi::{make_psi1, make_psi2, psi2_critical_report, DegreeThreeCover};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::belyi0::{fiber_polynomial, infinity_multiplicity, BelyiValue, Genus0BelyiMap, Passport};
use crate::curves::{genus1_passport, FfElem, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::polyalg::{gcd, split_by_valuation};
use crate::KPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    CoverComposite,
    IsogenyComposite,
    Explicit,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::CoverComposite => "cover-composite",
            Provenance::IsogenyComposite => "isogeny-composite",
            Provenance::Explicit => "explicit",
        })
    }
}

/// A Belyi function on a genus-1 superelliptic curve with its exactly computed passport.
#[derive(Debug, Clone, PartialEq)]
pub struct Genus1BelyiMap {
    curve: SuperellipticCurve,
    value: FfElem,
    passport: Passport,
    provenance: Provenance,
}

impl Genus1BelyiMap {
    /// Computes the passport by divisor analysis and checks `Σ(e − 1) = 2D`.
    pub fn new(curve: SuperellipticCurve, value: FfElem, provenance: Provenance) -> Result<Self> {
        let genus = curve.genus();
        if genus != 1 {
            return Err(Error::WrongGenus { expected: 1, found: genus });
        }
        if value.n() != curve.n() || value.curve_poly() != curve.f() {
            return Err(Error::CurveMismatch("function does not live on the given curve".into()));
        }
        let passport = genus1_passport(&value)?;
        let d = passport.degree().unwrap_or(0);
        if passport.ramification_total() != 2 * d {
            return Err(Error::NotBelyi(format!(
                "passport {passport} has Σ(e−1) = {} instead of {}",
                passport.ramification_total(),
                2 * d
            )));
        }
        Ok(Genus1BelyiMap { curve, value, passport, provenance })
    }

    pub fn curve(&self) -> &SuperellipticCurve {
        &self.curve
    }

    pub fn value(&self) -> &FfElem {
        &self.value
    }

    pub fn passport(&self) -> &Passport {
        &self.passport
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn degree(&self) -> usize {
        self.passport.degree().unwrap_or(0)
    }
}

/// Data of the cyclic cover `yⁿ = f(x)` of the line.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverSpec {
    pub n: usize,
    pub f: KPoly,
}

impl CoverSpec {
    pub fn new(n: usize, f: KPoly) -> Self {
        CoverSpec { n, f }
    }

    pub fn curve(&self) -> Result<SuperellipticCurve> {
        SuperellipticCurve::new(self.n, self.f.clone())
    }
}

impl From<&SuperellipticCurve> for CoverSpec {
    fn from(c: &SuperellipticCurve) -> Self {
        CoverSpec { n: c.n(), f: c.f().clone() }
    }
}

/// Ramification indices of the cover's branch points inside each fiber of `g0`, in `[∞, 0, 1]` order.
pub fn cover_marks(g0: &Genus0BelyiMap, curve: &SuperellipticCurve) -> Result<[Vec<usize>; 3]> {
    let f = curve.f().monic();
    let mut marks: [Vec<usize>; 3] = Default::default();
    let mut placed = 0;
    for v in BelyiValue::ALL {
        let p = fiber_polynomial(g0.map(), v);
        if p.is_zero() {
            continue;
        }
        let common = gcd(&f, &p);
        if common.deg0() == 0 {
            continue;
        }
        placed += common.deg0();
        for (piece, e) in split_by_valuation(&common, &p) {
            marks[v.index()].extend(std::iter::repeat(e).take(piece.deg0()));
        }
    }
    if placed != f.deg0() {
        return Err(Error::NotBelyi(format!(
            "{} of the cover's finite branch points lie outside the fibers over 0, 1, ∞",
            f.deg0() - placed
        )));
    }
    if curve.branch_points().at_infinity {
        let v = BelyiValue::ALL
            .into_iter()
            .find(|&v| infinity_multiplicity(g0.map(), v) > 0)
            .ok_or_else(|| Error::NotBelyi("x = ∞ lies outside the fibers over 0, 1, ∞".into()))?;
        marks[v.index()].push(infinity_multiplicity(g0.map(), v));
    }
    for m in &mut marks {
        m.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(marks)
}

/// Lifts `g0` to the curve `yⁿ = f` as the y-free function `g0(x)`.
///
/// The passport comes from the lifting rule and is cross-checked against the
/// divisor analysis of the lifted function.
pub fn compose_with_cover(g0: &Genus0BelyiMap, cover: &CoverSpec) -> Result<Genus1BelyiMap> {
    let curve = cover.curve()?;
    if g0.field() != curve.field() {
        return Err(Error::FieldMismatch("genus-0 map and cover are over different fields".into()));
    }
    let genus = curve.genus();
    if genus != 1 {
        return Err(Error::WrongGenus { expected: 1, found: genus });
    }
    let marks = cover_marks(g0, &curve)?;
    let predicted = predict_passport(g0.passport(), cover.n, &marks)?;
    let value = FfElem::from_ratfun(cover.n, curve.f(), g0.map().clone());
    let map = Genus1BelyiMap::new(curve, value, Provenance::CoverComposite)?;
    if map.passport != predicted {
        return Err(Error::NotBelyi(format!(
            "lifting rule gives {predicted} but the fibers of the lift are {}",
            map.passport
        )));
    }
    Ok(map)
}

/// Composes a genus-0 Belyi map with an arbitrary function on a genus-1 curve.
pub fn compose_genus0_after(g0: &Genus0BelyiMap, curve: &SuperellipticCurve, inner: &FfElem) -> Result<Genus1BelyiMap> {
    let value = inner.eval_ratfun(g0.map())?;
    Genus1BelyiMap::new(curve.clone(), value, Provenance::Explicit)
}

fn remove_marks(fiber: &[usize], marks: &[usize]) -> Option<Vec<usize>> {
    let mut rest = fiber.to_vec();
    for m in marks {
        let i = rest.iter().position(|e| e == m)?;
        rest.swap_remove(i);
    }
    Some(rest)
}

/// Passport of a lift through a cyclic cover of prime degree `n` branched at the marked points:
/// a marked `e` becomes one `n·e`, an unmarked `e` becomes `n` copies of `e`.
pub fn predict_passport(passport0: &Passport, n: usize, marked: &[Vec<usize>; 3]) -> Result<Passport> {
    if !matches!(n, 2 | 3) {
        return Err(Error::InvalidInput(format!("cover degree {n} not in {{2, 3}}")));
    }
    let b: usize = marked.iter().map(Vec::len).sum();
    let twice = (b * (n - 1)) as i64 - 2 * n as i64 + 2;
    if twice != 2 {
        return Err(Error::WrongGenus { expected: 1, found: twice.div_euclid(2) });
    }
    let mut fibers: [Vec<usize>; 3] = Default::default();
    for v in BelyiValue::ALL {
        let i = v.index();
        let rest = remove_marks(passport0.fiber(v), &marked[i]).ok_or_else(|| {
            Error::InvalidInput(format!("marks {:?} are not entries of the fiber {:?}", marked[i], passport0.fiber(v)))
        })?;
        fibers[i] = marked[i].iter().map(|e| n * e).chain(rest.iter().flat_map(|&e| std::iter::repeat(e).take(n))).collect();
    }
    let [inf, zero, one] = fibers;
    Ok(Passport::new(inf, zero, one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, NumberField};
    use crate::expr::{parse_poly, parse_ratfun};
    use proptest::prelude::*;

    fn g0(k: &crate::Field, s: &str) -> Genus0BelyiMap {
        Genus0BelyiMap::new(parse_ratfun(k, "x", s).unwrap()).unwrap()
    }

    fn cover(k: &crate::Field, n: usize, f: &str) -> CoverSpec {
        CoverSpec::new(n, parse_poly(k, "x", f).unwrap())
    }

    fn pp(s: &str) -> Passport {
        s.parse().unwrap()
    }

    #[test]
    fn degree_twelve_composites() {
        let q = NumberField::rationals();
        let phi1 = g0(&q, "(x^3+1)^2/(4x^3)");
        let m = compose_with_cover(&phi1, &cover(&q, 2, "x^3+1")).unwrap();
        assert_eq!(m.degree(), 12);
        assert_eq!(m.passport(), &pp("3^2 6/4^3/2^6"));
        assert_eq!(m.provenance(), Provenance::CoverComposite);
        assert!(m.value().is_x_only());
    }

    #[test]
    fn phi3_on_two_curves() {
        let q = NumberField::rationals();
        let phi3 = g0(&q, "x^3(x-2)^3/(2x-1)^3");
        let m = compose_with_cover(&phi3, &cover(&q, 2, "(x^2-4x+1)(x^2-x+1)")).unwrap();
        assert_eq!(m.passport(), &pp("3^4/3^4/4^2 2^2"));
    }

    #[test]
    fn phi5_on_j_curve() {
        let q = NumberField::rationals();
        let phi5 = g0(&q, "x^2(x+5)^3/(5x+1)^3");
        let m = compose_with_cover(&phi5, &cover(&q, 2, "x(x^2+18x+1)")).unwrap();
        assert_eq!(m.passport(), &pp("3^2 4/3^2 4/3^2 2^2"));
    }

    #[test]
    fn cubic_covers() {
        let q = NumberField::rationals();
        let m = compose_with_cover(&g0(&q, "x"), &cover(&q, 3, "x(x-1)")).unwrap();
        assert_eq!(m.passport(), &pp("3/3/3"));
        let k = NumberField::new(vec![int(1), int(0), int(1)], "i").unwrap();
        let deg5 = g0(&k, "x(x-1-2i)^4/((1+2i)x-1)^4");
        let m = compose_with_cover(&deg5, &cover(&k, 3, "x(x-1)")).unwrap();
        assert_eq!(m.degree(), 15);
        assert_eq!(m.passport(), &pp("4^3 3/4^3 3/2^6 3"));
    }

    #[test]
    fn branch_point_off_the_fibers() {
        let q = NumberField::rationals();
        let phi1 = g0(&q, "(x^3+1)^2/(4x^3)");
        assert!(matches!(compose_with_cover(&phi1, &cover(&q, 2, "x^3+2")), Err(Error::NotBelyi(_))));
        assert!(matches!(compose_with_cover(&phi1, &cover(&q, 2, "x^2+1")), Err(Error::WrongGenus { .. })));
    }

    #[test]
    fn lifting_rule_examples() {
        let p = predict_passport(&pp("3^2/2^3/2^3"), 2, &[vec![3], vec![2, 2, 2], vec![]]).unwrap();
        assert_eq!(p, pp("6 3^2/4^3/2^6"));
        let p = predict_passport(&pp("3 1/3 1/2^2"), 3, &[vec![1], vec![1], vec![2]]).unwrap();
        assert_eq!(p, pp("3^4/3^4/6 2^3"));
        assert!(matches!(
            predict_passport(&pp("3^2/2^3/2^3"), 2, &[vec![3], vec![2, 2], vec![]]),
            Err(Error::WrongGenus { .. })
        ));
        assert!(predict_passport(&pp("3^2/2^3/2^3"), 2, &[vec![1], vec![2, 2, 2], vec![]]).is_err());
    }

    proptest! {
        #[test]
        fn marking_four_ones_doubles_the_rest(rest in proptest::collection::vec(1usize..6, 0..5), split in 0usize..=4) {
            let mut zero = rest.clone();
            zero.extend(std::iter::repeat(1).take(split));
            let one = vec![1; 4 - split];
            let p0 = Passport::new(rest.clone(), zero, one);
            let p = predict_passport(&p0, 2, &[vec![], vec![1; split], vec![1; 4 - split]]).unwrap();
            let twos = vec![2; 4 - split];
            prop_assert_eq!(p.fiber(BelyiValue::One), twos.as_slice());
            let doubled: usize = rest.iter().sum::<usize>() * 2;
            prop_assert_eq!(p.fiber(BelyiValue::Infinity).iter().sum::<usize>(), doubled);
            prop_assert_eq!(p.ramification_total(), p0.ramification_total() * 2 + 4);
        }
    }
}
